//! Lazily extended integer power series and the coefficients of `U_β`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algnum::IntPolynomial;
use crate::betashift::DigitWord;
use crate::error::{Error, Result};

type Generator = Arc<dyn Fn(&[BigInt]) -> Result<BigInt> + Send + Sync>;

/// A power series in `ℤ[[X]]` whose coefficients are produced on demand by
/// a generator that sees every earlier coefficient. Computed coefficients
/// are never changed.
#[derive(Clone)]
pub struct PowerSeriesZ {
    coeffs: Vec<BigInt>,
    generator: Generator,
}

impl PowerSeriesZ {
    pub fn new(
        initial: Vec<BigInt>,
        generator: impl Fn(&[BigInt]) -> Result<BigInt> + Send + Sync + 'static,
    ) -> Self {
        PowerSeriesZ {
            coeffs: initial,
            generator: Arc::new(generator),
        }
    }

    pub fn known_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn extend_to(&mut self, len: usize) -> Result<()> {
        while self.coeffs.len() < len {
            let c = (self.generator)(&self.coeffs)?;
            self.coeffs.push(c);
        }
        Ok(())
    }

    /// Coefficient of `X^r`.
    pub fn coeff(&mut self, r: usize) -> Result<BigInt> {
        self.extend_to(r + 1)?;
        Ok(self.coeffs[r].clone())
    }

    /// The coefficients computed so far.
    pub fn known(&self) -> &[BigInt] {
        &self.coeffs
    }
}

impl fmt::Debug for PowerSeriesZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PowerSeriesZ")
            .field("coeffs", &self.coeffs)
            .finish_non_exhaustive()
    }
}

/// `P` normalized to `P(0) = 1`, checked to have a unit leading coefficient.
pub(crate) fn normalized(p: &IntPolynomial) -> Result<IntPolynomial> {
    let c0 = p.coeff(0);
    if !c0.abs().is_one() || !p.leading().abs().is_one() {
        return Err(Error::Precondition(format!(
            "P must have P(0) = ±1 and leading coefficient ±1, got {p}"
        )));
    }
    Ok(if c0.is_negative() { -p.clone() } else { p.clone() })
}

/// Digit `t_r` of the word (1-based), as an integer.
pub(crate) fn digit(t: &DigitWord, r: usize) -> Result<BigInt> {
    t.t(r)
        .map(BigInt::from)
        .ok_or(Error::HorizonExceeded(r - 1))
}

/// `U_β = −1 + Σ b_r X^r` with `P_β = U_β · f_β`, where
/// `f_β = −1 + Σ t_r X^r`.
///
/// `P` is the polynomial vanishing at `1/β` (for reciprocal `β`, its minimal
/// polynomial), normalized so that `P(0) = 1`. The coefficients follow
/// `b_r = −t_r − a_r + Σ_{j<r} b_j t_{r−j}` (with `a_r = 0` for `r > d`), and
/// the first `n` products `(U·f)_r` are checked against `P` by an
/// independent convolution.
pub fn u_beta_coeffs(p: &IntPolynomial, t: &DigitWord, n: usize) -> Result<PowerSeriesZ> {
    let p = normalized(p)?;
    let a: Vec<BigInt> = p.coeffs().to_vec();
    let word = t.clone();
    let mut u = PowerSeriesZ::new(vec![-BigInt::one()], move |b: &[BigInt]| {
        let r = b.len();
        let mut v = -digit(&word, r)? - a.get(r).cloned().unwrap_or_default();
        for (j, bj) in b.iter().enumerate().skip(1) {
            let tr = digit(&word, r - j)?;
            if !tr.is_zero() {
                v += bj * tr;
            }
        }
        Ok(v)
    });
    u.extend_to(n + 1)?;
    convolution_check(&p, t, u.known(), n)?;
    Ok(u)
}

/// `(U·f)_r − P_r` for `0 ≤ r ≤ n`, by direct convolution. `P` is taken
/// with the sign that makes `P(0) = 1`, as in [`u_beta_coeffs`].
pub fn convolution_residuals(
    p: &IntPolynomial,
    t: &DigitWord,
    b: &[BigInt],
    n: usize,
) -> Result<Vec<BigInt>> {
    let p = normalized(p)?;
    let f = |i: usize| -> Result<BigInt> {
        if i == 0 {
            Ok(-BigInt::one())
        } else {
            digit(t, i)
        }
    };
    let top = n.min(b.len().saturating_sub(1));
    let mut out = Vec::with_capacity(top + 1);
    for r in 0..=top {
        let mut s = BigInt::zero();
        for (i, bi) in b[..=r].iter().enumerate() {
            let fi = f(r - i)?;
            if !fi.is_zero() {
                s += bi * fi;
            }
        }
        out.push(s - p.coeff(r));
    }
    Ok(out)
}

/// Verifies `(U·f)_r = P_r` for `0 ≤ r ≤ n`.
pub fn convolution_check(p: &IntPolynomial, t: &DigitWord, b: &[BigInt], n: usize) -> Result<()> {
    let res = convolution_residuals(p, t, b, n)?;
    match res.iter().position(|d| !d.is_zero()) {
        None => Ok(()),
        Some(r) => Err(Error::ConvolutionMismatch {
            index: r,
            expected: p.coeff(r).to_string(),
            got: (&res[r] + p.coeff(r)).to_string(),
        }),
    }
}

/// `max_{r ∈ [lo, hi]} |b_r|^{1/r}`, the growth rate entering Hadamard's
/// formula for the radius of convergence of `U_β`.
pub fn growth_rate(b: &[BigInt], lo: usize, hi: usize) -> f64 {
    (lo.max(1)..=hi.min(b.len() - 1))
        .filter(|&r| !b[r].is_zero())
        .map(|r| {
            let bits = b[r].bits() as f64;
            let lead = if bits > 60.0 {
                (&b[r].abs() >> (bits as u64 - 53)).to_f64().unwrap().ln() + (bits - 53.0) * 2f64.ln()
            } else {
                b[r].abs().to_f64().unwrap().ln()
            };
            (lead / r as f64).exp()
        })
        .fold(0.0, f64::max)
}
