//! Angular distribution of root sets.
//!
//! For a polynomial `p` of degree `m` with roots `α_k`, the sector count
//! `N_F(φ, ψ)` is the number of roots with argument in `[φ, ψ)`. The
//! discrepancy `sup |N_F(φ,ψ)/m − (ψ−φ)/2π|` is bounded by a universal
//! constant times
//!
//! `σ_dis = max(m^{−1/2} Log(m+1), √(−ε Log ε), √(−δ Log δ))`,
//!
//! with `ε = max_k | |α_k| − 1 |` and `δ = |Log |a₀|| / m`. The constant is
//! not known, so [`discrepancy`] reports the ratio `sup_disc / σ_dis`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algnum::{cyclotomic_split, IntPolynomial};
use crate::error::{Error, Result};
use crate::measures::roots_with_multiplicity;

/// Arguments closer than this to `2π` are folded onto `0`, so that a root on
/// the positive real axis is counted identically whichever side rounding
/// puts it on.
const WRAP_EPS: f64 = 1e-12;

/// Root arguments in `[0, 2π)`, sorted, with the matching moduli.
#[derive(Clone, Debug, Serialize)]
pub struct AngularProfile {
    pub poly: IntPolynomial,
    pub angles: Vec<f64>,
    pub moduli: Vec<f64>,
}

fn normalize_angle(a: f64) -> f64 {
    let a = a.rem_euclid(TAU);
    if a > TAU - WRAP_EPS {
        0.0
    } else {
        a
    }
}

impl AngularProfile {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::Precondition("angular profile of the zero polynomial".into()));
        }
        let roots = roots_with_multiplicity(p)?;
        Ok(Self::from_roots(p.clone(), &roots))
    }

    /// Builds a profile from externally computed roots of `poly`.
    pub fn from_roots(poly: IntPolynomial, roots: &[Complex64]) -> Self {
        let mut pairs: Vec<(f64, f64)> = roots
            .iter()
            .map(|z| (normalize_angle(z.arg()), z.norm()))
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        let (angles, moduli) = pairs.into_iter().unzip();
        AngularProfile { poly, angles, moduli }
    }

    /// The same roots multiplied by `e^{iω}`.
    pub fn rotated(&self, omega: f64) -> Self {
        let roots: Vec<Complex64> = self
            .angles
            .iter()
            .zip(&self.moduli)
            .map(|(&a, &r)| Complex64::from_polar(r, a + omega))
            .collect();
        Self::from_roots(self.poly.clone(), &roots)
    }

    pub fn degree(&self) -> usize {
        self.angles.len()
    }

    /// Number of arguments in `[0, a)`.
    fn count_below(&self, a: f64) -> usize {
        self.angles.partition_point(|&x| x < a)
    }

    /// `N_F(φ, ψ)` for `φ ≤ ψ`. Arcs of length `≥ 2π` contain every root;
    /// shorter arcs wrap around `2π` when needed.
    pub fn n_f(&self, phi: f64, psi: f64) -> usize {
        assert!(phi <= psi, "n_f needs φ ≤ ψ");
        let m = self.degree();
        if psi - phi >= TAU {
            return m;
        }
        let a = phi.rem_euclid(TAU);
        let b = a + (psi - phi);
        if b <= TAU {
            self.count_below(b) - self.count_below(a)
        } else {
            m - self.count_below(a) + self.count_below(b - TAU)
        }
    }

    /// `max_k | |α_k| − 1 |`.
    pub fn epsilon(&self) -> f64 {
        self.moduli.iter().map(|r| (r - 1.0).abs()).fold(0.0, f64::max)
    }
}

/// `√(x |Log x|)`, continuous at `0`. For `x < 1` this is `√(−x Log x)`;
/// the absolute value keeps the bound meaningful for roots far off the
/// circle.
fn entropy_term(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else if x.is_infinite() {
        f64::INFINITY
    } else {
        (x * x.ln().abs()).sqrt()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub m: usize,
    pub eps: f64,
    pub delta: f64,
    pub sigma: f64,
    pub sup_disc: f64,
    /// `sup_disc / σ_dis`.
    pub ratio: f64,
    pub grid: usize,
}

/// Discrepancy of a profile over the sectors whose endpoints lie on the
/// grid `2πa/grid`, `0 ≤ a ≤ grid`.
///
/// With `E(a) = N_F(0, 2πa/grid)/m − a/grid`, every grid sector `[φ_a, φ_b)`
/// has discrepancy `|E(b) − E(a)|`, so the supremum is `max E − min E`.
pub fn profile_discrepancy(profile: &AngularProfile, grid: usize) -> Result<Discrepancy> {
    if grid < 8 {
        return Err(Error::Precondition(format!("grid must be at least 8, got {grid}")));
    }
    let m = profile.degree();
    if m == 0 {
        return Err(Error::Precondition("constant polynomial has no roots".into()));
    }
    let mf = m as f64;
    let (mut lo, mut hi) = (0.0f64, 0.0f64);
    for a in 0..=grid {
        let count = if a == grid {
            m
        } else {
            profile.count_below(TAU * a as f64 / grid as f64)
        };
        let e = count as f64 / mf - a as f64 / grid as f64;
        lo = lo.min(e);
        hi = hi.max(e);
    }
    let sup_disc = hi - lo;
    let eps = profile.epsilon();
    let a0 = profile.poly.coeff(0);
    let delta = if a0.is_zero() {
        f64::INFINITY
    } else {
        let abs = a0.magnitude().to_f64().unwrap_or(f64::INFINITY);
        abs.ln().abs() / mf
    };
    let sigma = (mf.powf(-0.5) * (mf + 1.0).ln())
        .max(entropy_term(eps))
        .max(entropy_term(delta));
    Ok(Discrepancy {
        m,
        eps,
        delta,
        sigma,
        sup_disc,
        ratio: sup_disc / sigma,
        grid,
    })
}

/// Discrepancy of the roots of `p` on a `grid × grid` set of sectors.
pub fn discrepancy(p: &IntPolynomial, grid: usize) -> Result<Discrepancy> {
    profile_discrepancy(&AngularProfile::new(p)?, grid)
}

/// One row of [`orbit_convergence_scan`].
#[derive(Clone, Debug, Serialize)]
pub struct OrbitRow {
    pub n: usize,
    /// Degree of the minimal polynomial of `θ_n⁻¹`.
    pub degree: usize,
    /// `θ_n⁻¹`, the house of the minimal polynomial.
    pub house: f64,
    pub discrepancy: Discrepancy,
}

/// The minimal polynomial of `θ_n⁻¹`: the reciprocal of `G_n` with its
/// cyclotomic factor (present for `n ≡ 5 mod 6`) removed.
pub fn theta_inverse_minpoly(n: usize) -> Result<IntPolynomial> {
    if n < 2 {
        return Err(Error::Precondition(format!("n must be at least 2, got {n}")));
    }
    Ok(cyclotomic_split(&IntPolynomial::trinomial(n).reciprocal())?.rest)
}

/// Discrepancy of the Galois orbit of `θ_n⁻¹` for each `n`, sorted by `n`.
pub fn orbit_convergence_scan(ns: &[usize], grid: usize) -> Result<Vec<OrbitRow>> {
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    ns.par_iter()
        .map(|&n| {
            let p = theta_inverse_minpoly(n)?;
            let profile = AngularProfile::new(&p)?;
            let house = profile.moduli.iter().copied().fold(0.0, f64::max);
            Ok(OrbitRow {
                n,
                degree: profile.degree(),
                house,
                discrepancy: profile_discrepancy(&profile, grid)?,
            })
        })
        .collect()
}

/// Whether the medians of consecutive windows of `values` decrease.
/// A window of 1 asks for strict monotonicity.
pub fn medians_decreasing(values: &[f64], window: usize) -> bool {
    let window = window.max(1);
    let medians: Vec<f64> = values
        .chunks(window)
        .map(|c| {
            let mut c = c.to_vec();
            c.sort_by(f64::total_cmp);
            let k = c.len();
            if k % 2 == 1 {
                c[k / 2]
            } else {
                0.5 * (c[k / 2 - 1] + c[k / 2])
            }
        })
        .collect();
    medians.windows(2).all(|w| w[1] < w[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn cyclotomic_is_equidistributed() {
        let d = discrepancy(&IntPolynomial::cyclotomic(101), 256).unwrap();
        assert_eq!(d.m, 100);
        assert!(d.sup_disc <= 2.0 / 100.0, "{d:?}");
        assert!(d.eps < 1e-12 && d.delta == 0.0);
    }

    #[test]
    fn real_roots_are_badly_distributed() {
        let d = discrepancy(&poly(&[1, -3, 1]), 64).unwrap();
        assert!(d.sup_disc > 0.9, "{d:?}");
        assert!(discrepancy(&poly(&[1, -3, 1]), 4).is_err());
    }

    #[test]
    fn trinomial_discrepancy() {
        let n = 260;
        let d = discrepancy(&IntPolynomial::trinomial(n), 512).unwrap();
        let l = (n as f64).ln();
        let c3 = d.sup_disc / (l / (n as f64).sqrt());
        assert!(c3 < 3.0, "c₃ ratio {c3}");
    }

    #[test]
    fn sector_counts() {
        let p = &IntPolynomial::trinomial(37) * &IntPolynomial::cyclotomic(9);
        let prof = AngularProfile::new(&p).unwrap();
        assert_eq!(prof.n_f(0.0, TAU), p.deg());
        assert_eq!(prof.n_f(1.3, 1.3 + TAU), p.deg());
        let (a, b, c) = (0.4, 2.9, 5.5);
        assert_eq!(prof.n_f(a, b) + prof.n_f(b, c), prof.n_f(a, c));
        assert_eq!(prof.n_f(c, a + TAU) + prof.n_f(a, c), p.deg());
    }

    #[test]
    fn scan_rows() {
        let rows = orbit_convergence_scan(&[16, 11, 23], 128).unwrap();
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![11, 16, 23]);
        // 11 and 23 are ≡ 5 mod 6 and lose the factor X² − X + 1.
        assert_eq!(rows.iter().map(|r| r.degree).collect::<Vec<_>>(), vec![9, 16, 21]);
        assert!(rows.windows(2).all(|w| w[1].house < w[0].house));
    }

    #[test]
    fn salem_epsilon_dominates() {
        let lehmer = poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let d = discrepancy(&lehmer, 128).unwrap();
        assert!((d.eps - 0.176_280_818).abs() < 1e-6);
        // At degree 10 the m^{−1/2} Log(m+1) term is still the larger one.
        assert!(d.sigma >= entropy_term(d.eps));
        assert!(entropy_term(d.eps) > 0.5);
    }

    #[test]
    fn medians() {
        assert!(medians_decreasing(&[3.0, 2.0, 1.0], 1));
        assert!(!medians_decreasing(&[3.0, 3.0], 1));
        assert!(medians_decreasing(&[5.0, 1.0, 9.0, 2.0, 2.5, 0.0], 3));
    }
}
