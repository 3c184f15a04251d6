//! Taylor coefficients of `f_β` at `1/β`, and the left limit of `f_γ` at a
//! Parry number with finite expansion.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algnum::Dyadic;
use crate::betashift::{renyi_expansion_float, DigitWord};
use crate::error::{Error, Result};
use crate::measures::Bounded;
use crate::trinomial::theta_n_inverse;

/// `c_{β,m} = Σ_{k ≥ m} C(k, m) t_k β^{−(k−m)}`, summed over the first
/// `terms` digits, with a geometric bound on the remainder (digits are at
/// most `⌊β⌋`).
pub fn taylor_c(beta: f64, t: &DigitWord, m: usize, terms: usize) -> Result<Bounded> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    if !(beta > 1.0) {
        return Err(Error::Precondition("β must exceed 1".into()));
    }
    let x = 1.0 / beta;
    let n_max = terms.max(m + 1);
    let mut sum = 0.0;
    // C(k, m) x^{k−m}, updated by the ratio (k+1)/(k+1−m) · x.
    let mut w = 1.0;
    for k in m..=n_max {
        if k > m {
            w *= k as f64 / (k - m) as f64 * x;
        }
        let tk = t.t(k).ok_or(Error::HorizonExceeded(k - 1))? as f64;
        sum += tk * w;
    }
    let next = w * (n_max + 1) as f64 / (n_max + 1 - m) as f64 * x;
    let ratio = (n_max + 2) as f64 / (n_max + 2 - m) as f64 * x;
    let error = if ratio < 1.0 {
        beta.floor() * next / (1.0 - ratio)
    } else {
        f64::INFINITY
    };
    Ok(Bounded { value: sum, error })
}

/// Length of the common prefix of the digits of `f_γ`,
/// `γ = θ_n⁻¹ − delta`, and the series of `(−1 + z + z^n)/(1 − z^n)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct JumpExperiment {
    pub n: usize,
    pub delta: f64,
    pub matching_digits: usize,
    pub horizon: usize,
}

pub fn cyclotomic_jump(n: usize, delta: f64, horizon: usize, bits: u32) -> Result<JumpExperiment> {
    if n < 2 || !(delta > 0.0) {
        return Err(Error::Precondition("needs n ≥ 2 and delta > 0".into()));
    }
    let (b, _) = theta_n_inverse(n)?.refine(bits);
    let d = Dyadic::from_f64(delta).ok_or_else(|| Error::Precondition("delta not finite".into()))?;
    let gamma = &b - &d;
    let exp = renyi_expansion_float(&gamma, bits, horizon)?;
    // (−1 + z + z^n)/(1 − z^n) = −1 + z + z^{n+1} + z^{2n+1} + …
    let limit = |k: usize| -> u32 { u32::from(k >= 1 && (k - 1).is_multiple_of(n)) };
    let digits = exp.computed_digits();
    let matching = digits
        .iter()
        .enumerate()
        .take_while(|(i, &dg)| dg == limit(i + 1))
        .count();
    Ok(JumpExperiment {
        n,
        delta,
        matching_digits: matching,
        horizon,
    })
}

/// `C(k, m)` as a float, for tests and diagnostics.
pub fn binomial(k: usize, m: usize) -> f64 {
    let mut c = BigInt::from(1);
    for i in 0..m {
        c = c * BigInt::from(k - i) / BigInt::from(i + 1);
    }
    c.to_f64().unwrap_or(f64::INFINITY)
}
