//! The Rouché admissibility function `κ(X, a)` and its optimum.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// `κ(1, a_max) = 3 − 2√2`, the root of `κ² − 6κ + 1` in `(0, 1)`.
pub const KAPPA: f64 = 0.171_572_875_253_809_9;

/// `a_max = π / Log((κ + 1)/(4κ))`.
pub fn a_max_closed_form() -> f64 {
    PI / ((KAPPA + 1.0) / (4.0 * KAPPA)).ln()
}

/// `κ(X, a) = |1 − e^{πX/a} e^{iπ√(1−X²)/a}| e^{−πX/a} / (e^{πX/a} + |…|)`.
pub fn kappa(x: f64, a: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) || !(a >= 1.0) {
        return Err(Error::Precondition(format!(
            "κ(X, a) needs X ∈ [−1, 1] and a ≥ 1, got X = {x}, a = {a}"
        )));
    }
    let e = (PI * x / a).exp();
    let phase = PI * (1.0 - x * x).max(0.0).sqrt() / a;
    let m = num_complex::Complex64::new(1.0 - e * phase.cos(), -e * phase.sin()).norm();
    Ok(m / e / (e + m))
}

/// `a ↦ κ(1, a)` maximized by golden-section search on `[1, 50]`.
pub fn a_max() -> f64 {
    let f = |a: f64| kappa(1.0, a).unwrap();
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (1.0f64, 50.0f64);
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > 1e-11 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
    }
    0.5 * (lo + hi)
}

/// Maximal opening angle `2 arcsin(κ/2)` of the lenticular sector.
pub fn opening_angle() -> f64 {
    2.0 * (KAPPA / 2.0).asin()
}

/// `c = −Log κ`, the limit of `n(1 − |z_{J_n,n}|)`.
pub fn c_limit() -> f64 {
    -KAPPA.ln()
}

/// `e^{−2c}/(1 − e^{−c})`.
pub fn minimum_gap_constant() -> f64 {
    let c = c_limit();
    (-2.0 * c).exp() / (1.0 - (-c).exp())
}
