//! Sectorization of the first quadrant of roots of `G_n`.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{Error, Result};

/// Angular boundaries used to split the roots `z_{j,n}` into regimes.
///
/// `u_n = √(Log n)·LogLog n` and `v_n = (Log n)^{3/2}` are concrete choices
/// inside the admissible growth ranges (`v_n − u_n = O((Log n)^{1+ε})` with
/// `ε = 1/2`).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SectorPlan {
    pub n: usize,
    pub u_n: f64,
    pub v_n: f64,
    /// `√(Log n · LogLog n)`.
    pub sqrt_l_ll: f64,
    pub log_n: f64,
    /// `2π u_n/n`, `2π√(Log n·LogLog n)/n`, `2π Log n/n`, `2π v_n/n`.
    pub boundaries: [f64; 4],
}

impl SectorPlan {
    pub fn new(n: usize) -> Result<Self> {
        if n < 18 {
            return Err(Error::Precondition(format!(
                "the sector plan needs n ≥ 18, got {n}"
            )));
        }
        let l = (n as f64).ln();
        let ll = l.ln();
        let u_n = l.sqrt() * ll;
        let v_n = l.powf(1.5);
        let sqrt_l_ll = (l * ll).sqrt();
        let s = TAU / n as f64;
        Ok(SectorPlan {
            n,
            u_n,
            v_n,
            sqrt_l_ll,
            log_n: l,
            boundaries: [s * u_n, s * sqrt_l_ll, s * l, s * v_n],
        })
    }

    /// `√(Log n·LogLog n) < u_n < Log n < v_n`.
    pub fn chain_holds(&self) -> bool {
        self.sqrt_l_ll < self.u_n && self.u_n < self.log_n && self.log_n < self.v_n
    }

    /// The chain followed by `v_n < ⌊n/6⌋`; the last link first holds at
    /// `n = 48`.
    pub fn fits_first_sextant(&self) -> bool {
        self.chain_holds() && self.v_n < (self.n / 6) as f64
    }

    /// Transition regions of the appendix: `(2π(2 Log n − v_n)/n, 2π v_n/n)`
    /// and `(2π(2√(Log n·LogLog n) − u_n)/n, 2π u_n/n)`.
    pub fn transition_regions(&self) -> [(f64, f64); 2] {
        let s = TAU / self.n as f64;
        [
            (s * (2.0 * self.log_n - self.v_n), s * self.v_n),
            (s * (2.0 * self.sqrt_l_ll - self.u_n), s * self.u_n),
        ]
    }
}
