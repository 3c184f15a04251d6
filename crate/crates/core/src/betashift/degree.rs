//! Dynamical degree and lacunarity of `d_β(1)`.

use num_traits::Signed;
use serde::Serialize;

use super::expansion::{BetaExpansion, BetaSource};
use super::word::zero_gaps;
use crate::algnum::{certified_sign, mahler_measure, reduce_mod, AlgebraicNumber, IntPolynomial};
use crate::error::{Error, Result};

/// Golden mean, the largest base with a dynamical degree.
pub const GOLDEN_MEAN: f64 = 1.618_033_988_749_895;

const SIGN_BITS: u32 = 8192;

/// `X^n − X^{n−1} − 1`; its sign at `β` is that of `β^{n−1}(β − 1) − 1`.
fn threshold_poly(n: usize) -> IntPolynomial {
    &(&IntPolynomial::monomial(1, n) - &IntPolynomial::monomial(1, n - 1)) - &IntPolynomial::one()
}

fn sign_at(q: &IntPolynomial, at: &mut AlgebraicNumber) -> Result<i8> {
    let m = at.minpoly();
    let q = if m.is_monic() || (-m.clone()).is_monic() {
        let monic = if m.leading().is_negative() { -m.clone() } else { m.clone() };
        reduce_mod(q, &monic)?.to_poly()
    } else {
        q.clone()
    };
    certified_sign(&q, at, SIGN_BITS)
}

/// First guess for the smallest `n` with `β^{n−1}(β−1) ≥ 1`.
fn estimate(b: f64) -> usize {
    let n = 1.0 - (b - 1.0).ln() / b.ln();
    n.ceil().max(2.0) as usize
}

/// `dyg(β)`: the `n ≥ 2` with `θ_n⁻¹ ≤ β < θ_{n−1}⁻¹`, for `1 < β ≤ φ`.
///
/// `β ≥ θ_n⁻¹` is equivalent to `β^{n−1}(β − 1) ≥ 1`, which is decided as a
/// certified sign of `X^n − X^{n−1} − 1` at `β` (exact when it vanishes,
/// i.e. when `β = θ_n⁻¹`).
pub fn dynamical_degree(beta: &AlgebraicNumber) -> Result<usize> {
    let mut at = beta.clone();
    let one = num_rational::BigRational::from_integer(1.into());
    if at.cmp_rational(&one) != std::cmp::Ordering::Greater
        || sign_at(&IntPolynomial::from_i64(&[-1, -1, 1]), &mut at)? > 0
    {
        return Err(Error::OutOfRange(
            "the dynamical degree is defined for 1 < β ≤ (1+√5)/2".into(),
        ));
    }
    let mut n = estimate(at.to_f64());
    while sign_at(&threshold_poly(n), &mut at)? < 0 {
        n += 1;
    }
    while n > 2 && sign_at(&threshold_poly(n - 1), &mut at)? >= 0 {
        n -= 1;
    }
    Ok(n)
}

/// Float version of [`dynamical_degree`]; boundary cases within a few ulps
/// are resolved towards the larger base.
pub fn dynamical_degree_f64(b: f64) -> Result<usize> {
    if !(b > 1.0 && b <= GOLDEN_MEAN * (1.0 + 4.0 * f64::EPSILON)) {
        return Err(Error::OutOfRange(format!(
            "the dynamical degree is defined for 1 < β ≤ (1+√5)/2, got {b}"
        )));
    }
    let ok = |n: usize| {
        let lhs = (n as f64 - 1.0) * b.ln() + (b - 1.0).ln();
        lhs >= -8.0 * n as f64 * f64::EPSILON
    };
    let mut n = estimate(b);
    while !ok(n) {
        n += 1;
    }
    while n > 2 && ok(n - 1) {
        n -= 1;
    }
    Ok(n)
}

/// The closed-form approximation `⌊(β/(β−1)) Log(β/(β−1))⌋` of `dyg(β)`,
/// reliable only for bases close to 1 (it is an asymptotic formula).
pub fn dyg_integer_part_formula(b: f64) -> i64 {
    let q = b / (b - 1.0);
    (q * q.ln()).floor() as i64
}

/// Ostrowski quotients `s_n/m_n` of an expansion and the Mahler-measure
/// bound on their limit superior.
#[derive(Clone, Debug, Serialize)]
pub struct OstrowskiReport {
    /// `(m_n, s_n, s_n/m_n)` over the gaps with `s_n − m_n ≥ 2`.
    pub quotients: Vec<(usize, usize, f64)>,
    /// `Log M(β) / Log β`.
    pub bound: f64,
    /// Largest quotient with `m_n` in the second half of the examined digits.
    pub limsup_estimate: f64,
    /// The estimate exceeds the bound by more than the tolerance.
    pub violation: bool,
    /// Length of the zero run after `t_1`; with `dyg(β) = n` it is `n − 2`.
    pub leading_gap: Option<usize>,
    /// Later gaps `(position of the opening digit, length)` shorter than the
    /// leading gap, which no base `β ∈ (1, φ]` can produce.
    pub short_gaps: Vec<(usize, usize)>,
}

/// Gap statistics over the first `limit` digits of `d_β(1)`. Reports
/// without quotients when fewer than two gaps exist.
pub fn ostrowski_report(exp: &BetaExpansion, limit: usize, tol: f64) -> Result<OstrowskiReport> {
    let (beta_f, minpoly) = match &exp.beta {
        BetaSource::Exact(a) => (a.to_f64(), a.minpoly().clone()),
        BetaSource::Float { .. } => {
            return Err(Error::Precondition(
                "the Mahler-measure bound needs an exact base".into(),
            ))
        }
    };
    let bound = mahler_measure(&minpoly)?.ln() / beta_f.ln();
    let gaps = zero_gaps(&exp.word, limit);
    let leading_gap = match exp.word.get(0) {
        Some(d) if d != 0 => gaps.first().filter(|g| g.0 == 1).map(|g| g.1),
        _ => None,
    };
    let short_gaps = match leading_gap {
        Some(g0) => gaps.iter().skip(1).filter(|g| g.1 < g0).copied().collect(),
        None => Vec::new(),
    };
    let quotients: Vec<(usize, usize, f64)> = gaps
        .iter()
        .filter(|g| g.1 >= 1)
        .map(|&(m, len)| {
            let s = m + len + 1;
            (m, s, s as f64 / m as f64)
        })
        .collect();
    if quotients.len() < 2 {
        return Ok(OstrowskiReport {
            quotients: Vec::new(),
            bound,
            limsup_estimate: f64::NAN,
            violation: false,
            leading_gap,
            short_gaps,
        });
    }
    let half = limit / 2;
    let limsup_estimate = quotients
        .iter()
        .filter(|q| q.0 >= half)
        .map(|q| q.2)
        .fold(f64::NAN, f64::max);
    let violation = limsup_estimate > bound + tol;
    Ok(OstrowskiReport {
        quotients,
        bound,
        limsup_estimate,
        violation,
        leading_gap,
        short_gaps,
    })
}
