//! The lenticular Mahler measure `M_r`, its lower bound `L_r`, and the
//! minorants and bounds derived from them.

use std::f64::consts::PI;

use serde::Serialize;

use super::constants::{lambda_r, mu_r};
use super::mahler::{mahler, NumberClass};
use crate::algnum::IntPolynomial;
use crate::betashift::dynamical_degree_f64;
use crate::error::{Error, Result};
use crate::rouche::{a_max, j_n_from, refined_radius, Lenticulus, KAPPA, N2};
use crate::trinomial::{roots, theta_n_f64, SectorPlan};

/// Default `η` of the Schinzel–Zassenhaus type bound.
pub const DEFAULT_ETA: usize = 259;

/// `M_r(β) = Π_{ω ∈ L_β} |ω|⁻¹`, conjugates counted.
pub fn lenticular_measure(lent: &Lenticulus) -> Result<f64> {
    if lent.zeros.is_empty() {
        return Err(Error::Precondition("empty lenticulus".into()));
    }
    let log: f64 = lent
        .zeros
        .iter()
        .map(|z| if z.j == 0 { 1.0 } else { 2.0 } * z.omega.norm().ln())
        .sum();
    Ok((-log).exp())
}

/// `L_r` and its deviations from `Log(Λ_r μ_r)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct LrValue {
    pub n: usize,
    pub l_r: f64,
    /// `−Log Λ_r − Σ_{⌈Log n⌉ ≤ j ≤ J_n} (2/n) Log(2 sin(πj/n))`.
    pub delta1: f64,
    /// `−Log μ_r − Σ_{⌈Log n⌉ ≤ j ≤ J_n} (2/n) Log[(1 + 2s − √(1 − 12s + 4s²))/(8s)]`,
    /// `s = sin(πj/n)`.
    pub delta2: f64,
}

impl LrValue {
    pub fn exp(&self) -> f64 {
        self.l_r.exp()
    }
}

/// The lower bound `L_r(β)` of `Log M_r(β)`, a function of `n = dyg(β) ≥ 260`:
///
/// `Log θ_n⁻¹ − 2 Σ_{j ≤ J_n} Log|z_{j,n}| − 2 Σ_{j ≤ ⌊v_n⌋} Log(1 + π/(n a_max))
/// − 2 Σ_{⌈v_n⌉ ≤ j ≤ J_n} Log(1 + π/(n a_{j,n}))`.
pub fn l_r_lower_bound(n: usize) -> Result<LrValue> {
    if n < N2 {
        return Err(Error::Precondition(format!("L_r needs n ≥ 260, got n = {n}")));
    }
    let rs = roots(n, 53)?;
    let j_n = j_n_from(&rs)?;
    let nf = n as f64;
    let v = SectorPlan::new(n)?.v_n;
    let (fl, ce) = (v.floor() as usize, v.ceil() as usize);
    let mut l = -rs.theta_f64().ln();
    for j in 1..=j_n {
        l -= 2.0 * rs.z(j)?.norm().ln();
    }
    l -= 2.0 * fl.min(j_n) as f64 * (1.0 + PI / (nf * a_max())).ln();
    for j in ce..=j_n {
        let d = refined_radius(&rs, j)?.development;
        l -= 2.0 * (1.0 + d / nf).ln();
    }
    let lo = nf.ln().ceil() as usize;
    let (mut s1, mut s2) = (0.0, 0.0);
    for j in lo..=j_n {
        let s = (PI * j as f64 / nf).sin();
        s1 += 2.0 / nf * (2.0 * s).ln();
        let disc = (1.0 - 12.0 * s + 4.0 * s * s).max(0.0);
        s2 += 2.0 / nf * ((1.0 + 2.0 * s - disc.sqrt()) / (8.0 * s)).ln();
    }
    Ok(LrValue {
        n,
        l_r: l,
        delta1: -lambda_r().ln() - s1,
        delta2: -mu_r().ln() - s2,
    })
}

/// `Λ_r μ_r (1 − arcsin(κ/2)/(π Log n))`, the Dobrowolski-type minorant of
/// `M(β)` for `dyg(β) = n ≥ 260`.
pub fn dobrowolski_minorant(n: usize) -> Result<f64> {
    if n < N2 {
        return Err(Error::Precondition(format!(
            "the minorant is established for n ≥ 260, got n = {n}"
        )));
    }
    Ok(dobrowolski_formula(n as f64))
}

/// The minorant formula evaluated at any `n > 1`, without range check.
pub fn dobrowolski_formula(n: f64) -> f64 {
    lambda_r() * mu_r() * (1.0 - (KAPPA / 2.0).asin() / (PI * n.ln()))
}

/// `1 + (θ_η⁻¹ − 1)/deg`.
pub fn schinzel_bound(deg: usize, eta: usize) -> Result<f64> {
    if deg == 0 || eta < 2 {
        return Err(Error::Precondition("schinzel_bound needs deg ≥ 1 and η ≥ 2".into()));
    }
    Ok(1.0 + (1.0 / theta_n_f64(eta) - 1.0) / deg as f64)
}

/// `c̃ = (2/π) ((Log 260 − LogLog 260)/Log 260) (arcsin(κ/2) + κ Log κ/(260 √(4 − κ²)))`.
pub fn schinzel_c_tilde() -> f64 {
    let l = 260f64.ln();
    let k = KAPPA;
    2.0 / PI * (l - l.ln()) / l * ((k / 2.0).asin() + k * k.ln() / (260.0 * (4.0 - k * k).sqrt()))
}

/// `n (2 arcsin(κ/2)/π) + 2κ Log κ/(π √(4 − κ²))`, a lower bound of
/// `deg(α)` for reciprocal `α` with `dyg(α) = n ≥ 260`.
pub fn deg_lower_bound(n: usize) -> f64 {
    let k = KAPPA;
    n as f64 * 2.0 * (k / 2.0).asin() / PI + 2.0 * k * k.ln() / (PI * (4.0 - k * k).sqrt())
}

/// Outcome of [`salem_bound_check`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SalemCheck {
    pub beta: f64,
    /// `θ_31⁻¹`.
    pub threshold: f64,
    pub passes: bool,
    pub dyg: usize,
    pub dyg_below_32: bool,
}

/// Checks `β > θ_31⁻¹ = 1.08544…` for the Salem number defined by `p`.
pub fn salem_bound_check(p: &IntPolynomial) -> Result<SalemCheck> {
    let r = mahler(p)?;
    if r.class != NumberClass::Salem {
        return Err(Error::Precondition(format!("{p} does not define a Salem number ({:?})", r.class)));
    }
    let threshold = 1.0 / theta_n_f64(31);
    let dyg = dynamical_degree_f64(r.house)?;
    Ok(SalemCheck {
        beta: r.house,
        threshold,
        passes: r.house > threshold,
        dyg,
        dyg_below_32: dyg < 32,
    })
}

/// The jump `|z_{J_n, n−1}|⁻²` of `M_r` at `θ_{n−1}⁻¹`.
pub fn mr_jump(n: usize) -> Result<f64> {
    if n < 196 {
        return Err(Error::Precondition(format!("mr_jump needs n ≥ 196, got n = {n}")));
    }
    let j_n = j_n_from(&roots(n, 53)?)?;
    let z = roots(n - 1, 53)?.z(j_n)?;
    Ok(z.norm().powi(-2))
}
