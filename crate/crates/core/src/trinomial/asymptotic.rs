//! Poincaré asymptotic expansions of `θ_n` and of the roots `z_{j,n}`.
//!
//! Every function returns the development `D(·)` together with the envelope
//! of its terminant, with the stated constant (1, or 1/2 for `θ_n`).

use std::f64::consts::PI;

use serde::Serialize;

use super::sector::SectorPlan;
use super::theta_n_f64;
use crate::error::{Error, Result};

/// A development `D(x)` and the bound on its terminant `|x − D(x)|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticValue {
    pub development: f64,
    pub terminant_bound: f64,
}

impl AsymptoticValue {
    pub fn new(development: f64, terminant_bound: f64) -> Self {
        debug_assert!(terminant_bound >= 0.0);
        AsymptoticValue {
            development,
            terminant_bound,
        }
    }

    /// `|x − D| / tl`; at most 1 when `x` is inside the envelope.
    pub fn deviation(&self, x: f64) -> f64 {
        (x - self.development).abs() / self.terminant_bound
    }

    pub fn contains(&self, x: f64) -> bool {
        (x - self.development).abs() <= self.terminant_bound
    }
}

/// `Log n` and `Log Log n`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Logs {
    pub l: f64,
    pub ll: f64,
}

impl Logs {
    pub fn of(n: usize) -> Self {
        let l = (n as f64).ln();
        Logs { l, ll: l.ln() }
    }

    /// `(Log Log n / Log n)²`.
    pub fn ratio2(&self) -> f64 {
        (self.ll / self.l).powi(2)
    }
}

fn log_2sin(n: usize, j: usize) -> f64 {
    (2.0 * (PI * j as f64 / n as f64).sin()).ln()
}

/// `D(θ_n)` with `|θ_n − D(θ_n)| ≤ (1/2n)(LogLog n/Log n)²`.
pub fn theta_n_expansion(n: usize) -> Result<AsymptoticValue> {
    if n < 6 {
        return Err(Error::Precondition(format!(
            "the expansion of θ_n needs n ≥ 6, got {n}"
        )));
    }
    let Logs { l, ll } = Logs::of(n);
    let nf = n as f64;
    let inner = ll - nf * (1.0 - l / nf).ln() - l;
    let d = 1.0 - (l / nf) * (1.0 - (nf - l) / (nf * l + nf - l) * inner);
    Ok(AsymptoticValue::new(d, 0.5 * Logs::of(n).ratio2() / nf))
}

/// `λ_n` through its expansion `(LogLog n/Log n)·1/(1 + 1/Log n)`, with
/// terminant `LogLog n / n`.
pub fn lambda_n(n: usize) -> Result<AsymptoticValue> {
    if n < 6 {
        return Err(Error::Precondition(format!("λ_n needs n ≥ 6, got {n}")));
    }
    let Logs { l, ll } = Logs::of(n);
    Ok(AsymptoticValue::new(
        (ll / l) / (1.0 + 1.0 / l),
        ll / n as f64,
    ))
}

/// `λ_n` from its definition `1 − D(θ_n) = (Log n/n)(1 − λ_n)`.
pub fn lambda_n_defined(n: usize) -> Result<f64> {
    let d = theta_n_expansion(n)?.development;
    let l = (n as f64).ln();
    Ok(1.0 - (1.0 - d) * n as f64 / l)
}

/// The three regimes of the upper roots with `arg < π/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ZjnRegime {
    /// `arg z > 2π Log n / n`.
    Main,
    /// `arg z < 2π √(Log n · LogLog n) / n`.
    BumpInner,
    /// Between the two boundaries above.
    BumpOuter,
}

impl ZjnRegime {
    pub fn name(&self) -> &'static str {
        match self {
            ZjnRegime::Main => "main",
            ZjnRegime::BumpInner => "bump1",
            ZjnRegime::BumpOuter => "bump2",
        }
    }
}

/// `D(Re z_{j,n})`, `D(Im z_{j,n})` in one regime.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RegimeValue {
    pub regime: ZjnRegime,
    pub re: AsymptoticValue,
    pub im: AsymptoticValue,
}

/// The expansion of `z_{j,n}`; inside a transition band the neighbouring
/// regime is evaluated as well.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ZjnExpansion {
    pub n: usize,
    pub j: usize,
    pub value: RegimeValue,
    pub transition: Option<RegimeValue>,
}

impl ZjnExpansion {
    pub fn in_transition(&self) -> bool {
        self.transition.is_some()
    }

    /// True if the point lies in the envelope of the primary regime, or of
    /// the neighbouring one inside a transition band.
    pub fn contains(&self, re: f64, im: f64) -> bool {
        let ok = |v: &RegimeValue| v.re.contains(re) && v.im.contains(im);
        ok(&self.value) || self.transition.as_ref().is_some_and(ok)
    }
}

fn regime_value(n: usize, j: usize, regime: ZjnRegime, theta: f64, lambda: f64) -> RegimeValue {
    let lg = Logs::of(n);
    let (l, nf, jf) = (lg.l, n as f64, j as f64);
    let x = jf / l;
    let (re, im) = match regime {
        ZjnRegime::Main => {
            let a = 2.0 * PI * jf / nf;
            let s = log_2sin(n, j);
            let tl = lg.ratio2() / nf;
            (
                AsymptoticValue::new(a.cos() + s / nf, tl),
                AsymptoticValue::new(a.sin() + (PI * jf / nf).tan() * s / nf, tl),
            )
        }
        ZjnRegime::BumpInner => (
            AsymptoticValue::new(
                theta + (2.0 * PI * PI / nf) * x * x * (1.0 + 2.0 * lambda),
                x * x * lg.ratio2() / (nf * l),
            ),
            AsymptoticValue::new(
                (2.0 * PI * l / nf) * x * (1.0 - (1.0 + lambda) / l),
                x * lg.ratio2() / (nf * l),
            ),
        ),
        ZjnRegime::BumpOuter => {
            let x2 = x * x;
            (
                AsymptoticValue::new(
                    theta
                        + (2.0 * PI * PI / nf)
                            * x2
                            * (1.0 + (2.0 * PI * PI / 3.0) * x2 * (1.0 + lambda)),
                    x.powi(6) / nf,
                ),
                AsymptoticValue::new(
                    (2.0 * PI * l / nf)
                        * x
                        * (1.0
                            - (1.0 / l)
                                * (1.0 - (4.0 * PI * PI / 3.0) * x2 * (1.0 - (1.0 - lambda) / l))),
                    x.powi(5) / nf,
                ),
            )
        }
    };
    RegimeValue { regime, re, im }
}

/// Expansion of `z_{j,n}` for `n ≥ 18`, `1 ≤ j ≤ ⌊(n−1)/4⌋`.
///
/// The regime follows from `2πj/n` against the boundaries
/// `2π√(Log n·LogLog n)/n` and `2π Log n/n`; within `2π/n` of a boundary
/// both adjacent regimes are returned. The bump formulas use the certified
/// value of `θ_n` and the development of `λ_n`.
pub fn zjn_expansion(n: usize, j: usize) -> Result<ZjnExpansion> {
    if n < 18 || j == 0 || j > (n - 1) / 4 {
        return Err(Error::OutOfRange(format!(
            "z_{{j,n}} expansions need n ≥ 18 and 1 ≤ j ≤ ⌊(n−1)/4⌋, got n = {n}, j = {j}"
        )));
    }
    let plan = SectorPlan::new(n)?;
    let jf = j as f64;
    let (b_inner, b_main) = (plan.sqrt_l_ll, plan.log_n);
    let regime_of = |x: f64| {
        if x > b_main {
            ZjnRegime::Main
        } else if x < b_inner {
            ZjnRegime::BumpInner
        } else {
            ZjnRegime::BumpOuter
        }
    };
    let primary = regime_of(jf);
    // 2πj/n within 2π/n of a boundary is |j − boundary| < 1.
    let pair = if (jf - b_inner).abs() < 1.0 {
        Some((ZjnRegime::BumpInner, ZjnRegime::BumpOuter))
    } else if (jf - b_main).abs() < 1.0 {
        Some((ZjnRegime::BumpOuter, ZjnRegime::Main))
    } else {
        None
    };
    let neighbour = pair.map(|(a, b)| if a == primary { b } else { a });
    let theta = theta_n_f64(n);
    let lambda = lambda_n(n)?.development;
    Ok(ZjnExpansion {
        n,
        j,
        value: regime_value(n, j, primary, theta, lambda),
        transition: neighbour.map(|r| regime_value(n, j, r, theta, lambda)),
    })
}

/// Which quantity attached to `z_{j,n}` is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModulusForm {
    /// `|z_{j,n}|` to first order.
    Order1,
    /// `|z_{j,n}|` to third order.
    Order3,
    /// `|z_{1,n}|`.
    FirstRoot,
    /// `|−1 + z_{1,n}|`.
    FirstRootDistance,
    /// `|−1 + z_{j,n}|`.
    DistanceToOne,
    /// `|−1 + z_{j,n}| / |z_{j,n}|`.
    DistanceRatio,
}

fn outside_bump_range(plan: &SectorPlan) -> (usize, usize) {
    (plan.v_n.ceil() as usize, plan.n / 6)
}

/// Expansion of a modulus or distance attached to `z_{j,n}`, `n ≥ 18`.
///
/// `FirstRoot*` forms need `j = 1`; the others need `⌈v_n⌉ ≤ j ≤ ⌊n/6⌋`.
pub fn modulus_expansion(n: usize, j: usize, form: ModulusForm) -> Result<AsymptoticValue> {
    let plan = SectorPlan::new(n)?;
    let lg = Logs::of(n);
    let nf = n as f64;
    match form {
        ModulusForm::FirstRoot | ModulusForm::FirstRootDistance => {
            if j != 1 {
                return Err(Error::OutOfRange(format!(
                    "the first-root expansion is for j = 1, got j = {j}"
                )));
            }
            let t = (lg.l - lg.ll) / nf;
            let tl = (lg.ll / lg.l) / nf;
            Ok(if form == ModulusForm::FirstRoot {
                AsymptoticValue::new(1.0 - t, tl)
            } else {
                AsymptoticValue::new(t, tl)
            })
        }
        _ => {
            let (lo, hi) = outside_bump_range(&plan);
            if j < lo || j > hi {
                return Err(Error::OutOfRange(format!(
                    "{form:?} holds outside the bump sector, ⌈v_n⌉ = {lo} ≤ j ≤ ⌊n/6⌋ = {hi}; got j = {j}"
                )));
            }
            let s = log_2sin(n, j);
            let two_sin = 2.0 * (PI * j as f64 / nf).sin();
            let tl = lg.ratio2() / nf;
            Ok(match form {
                ModulusForm::Order1 => AsymptoticValue::new(1.0 + s / nf, tl),
                ModulusForm::Order3 => AsymptoticValue::new(
                    1.0 + s / nf + 0.5 * lg.ratio2() / nf,
                    lg.ll * lg.ll / lg.l.powi(3) / nf,
                ),
                ModulusForm::DistanceToOne => AsymptoticValue::new(two_sin, tl),
                ModulusForm::DistanceRatio => {
                    AsymptoticValue::new(two_sin * (1.0 - s / nf), 2.0 * tl)
                }
                _ => unreachable!(),
            })
        }
    }
}

/// `arg z_{j,n} = 2π(j/n + A_{j,n})` for `⌈v_n⌉ ≤ j ≤ ⌊n/6⌋`.
pub fn arg_expansion(n: usize, j: usize) -> Result<AsymptoticValue> {
    let plan = SectorPlan::new(n)?;
    let (lo, hi) = outside_bump_range(&plan);
    if j < lo || j > hi {
        return Err(Error::OutOfRange(format!(
            "the argument expansion holds for ⌈v_n⌉ = {lo} ≤ j ≤ ⌊n/6⌋ = {hi}; got j = {j}"
        )));
    }
    let (nf, jf) = (n as f64, j as f64);
    let a = 2.0 * PI * jf / nf;
    let big_a = -(1.0 / (2.0 * PI * nf)) * ((1.0 - a.cos()) / a.sin()) * log_2sin(n, j);
    Ok(AsymptoticValue::new(
        2.0 * PI * (jf / nf + big_a),
        Logs::of(n).ratio2() / nf,
    ))
}

/// Bound `(1/n)(LogLog n/Log n)²` on `θ_n − θ_{n−1}`.
pub fn theta_step_bound(n: usize) -> f64 {
    Logs::of(n).ratio2() / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_development_tends_to_one() {
        let mut prev = 0.0;
        for n in [50usize, 100, 200, 500, 1000, 2000, 5000] {
            let d = theta_n_expansion(n).unwrap().development;
            assert!(d > prev && d < 1.0, "n = {n}: {d}");
            prev = d;
        }
        assert!(theta_n_expansion(5).is_err());
    }

    #[test]
    fn theta_within_terminant() {
        for n in [260usize, 615, 1000] {
            let e = theta_n_expansion(n).unwrap();
            assert!(e.contains(theta_n_f64(n)), "n = {n}: {}", e.deviation(theta_n_f64(n)));
        }
    }

    #[test]
    fn lambda_definition_against_expansion() {
        let n = 260;
        let lam = lambda_n(n).unwrap();
        let d = lambda_n_defined(n).unwrap();
        assert!(lam.contains(d), "{} vs {d}", lam.development);
        // 1 − D(θ_n) = (Log n/n)(1 − λ_n) with λ_n from its expansion.
        let l = (n as f64).ln();
        let lhs = 1.0 - theta_n_expansion(n).unwrap().development;
        let rhs = l / n as f64 * (1.0 - lam.development);
        assert!((lhs - rhs).abs() <= l / n as f64 * lam.terminant_bound);
    }

    #[test]
    fn regimes_and_transitions() {
        let n = 615;
        // √(Log·LogLog) ≈ 3.45, Log ≈ 6.42.
        assert_eq!(zjn_expansion(n, 1).unwrap().value.regime, ZjnRegime::BumpInner);
        assert_eq!(zjn_expansion(n, 5).unwrap().value.regime, ZjnRegime::BumpOuter);
        assert_eq!(zjn_expansion(n, 100).unwrap().value.regime, ZjnRegime::Main);
        let t = zjn_expansion(n, 6).unwrap();
        assert!(t.in_transition());
        assert_eq!(t.value.regime, ZjnRegime::BumpOuter);
        assert_eq!(t.transition.unwrap().regime, ZjnRegime::Main);
        let t = zjn_expansion(n, 3).unwrap();
        assert_eq!(t.transition.unwrap().regime, ZjnRegime::BumpOuter);
        assert!(zjn_expansion(n, 154).is_err());
        assert!(zjn_expansion(17, 1).is_err());
    }

    #[test]
    fn bump_inner_imaginary_part() {
        let n = 615;
        let e = zjn_expansion(n, 1).unwrap();
        let lam = lambda_n(n).unwrap().development;
        let l = (n as f64).ln();
        let want = (2.0 * PI / n as f64) * (1.0 - (1.0 + lam) / l);
        assert!((e.value.im.development - want).abs() < 1e-15);
    }

    #[test]
    fn modulus_near_sixth_of_turn() {
        let n = 260;
        let e = modulus_expansion(n, 43, ModulusForm::Order1).unwrap();
        assert!((e.development - 1.0).abs() < 0.01 / n as f64);
        assert!(modulus_expansion(n, 3, ModulusForm::Order1).is_err());
        assert!(modulus_expansion(n, 2, ModulusForm::FirstRoot).is_err());
        let f = modulus_expansion(615, 1, ModulusForm::FirstRoot).unwrap();
        let lg = Logs::of(615);
        assert!((f.development - (1.0 - (lg.l - lg.ll) / 615.0)).abs() < 1e-15);
    }
}
