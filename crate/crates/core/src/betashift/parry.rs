//! Parry polynomials, the Parry Upper function and the inverse problem
//! "digits → base".

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::expansion::{BetaExpansion, BetaSource, ExpansionStatus};
use super::word::{is_lyndon, DigitWord, Tail};
use crate::algnum::{cyclotomic_split, isolate_real_roots, AlgebraicNumber, IntPolynomial, RatInterval};
use crate::error::{Error, Result};

/// Shape of `d_β(1)` that a Parry polynomial was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ParryCase {
    /// `d_β(1) = 0.t_1…t_m`.
    Simple { m: usize },
    /// `d_β(1) = 0.t_1…t_m (t_{m+1}…t_{m+p+1})^ω` with `m ≥ 1`.
    NonSimplePeriodic { m: usize, p: usize },
    /// `d_β(1) = 0.(t_1…t_{p+1})^ω`.
    PurelyPeriodic { p: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParryPolynomial {
    pub poly: IntPolynomial,
    pub case: ParryCase,
}

impl ParryPolynomial {
    /// Builds the polynomial from a finite or eventually periodic word.
    pub fn from_word(w: &DigitWord) -> Result<Self> {
        match w.tail() {
            Tail::Unknown => Err(Error::Precondition(
                "a Parry polynomial needs a finite or eventually periodic expansion".into(),
            )),
            Tail::Zeros => {
                let m = w.finite_length().unwrap_or(0);
                if m == 0 {
                    return Err(Error::Precondition("empty expansion".into()));
                }
                let mut c = vec![BigInt::from(0); m + 1];
                c[m] = BigInt::one();
                for i in 1..=m {
                    c[m - i] -= BigInt::from(w.prefix()[i - 1]);
                }
                Ok(ParryPolynomial {
                    poly: IntPolynomial::new(c),
                    case: ParryCase::Simple { m },
                })
            }
            Tail::Periodic(period) => {
                let m = w.prefix().len();
                let p = period.len() - 1;
                let d = m + p + 1;
                let t = |i: usize| BigInt::from(w.t(i).expect("known word"));
                let mut c = vec![BigInt::from(0); d + 1];
                c[d] += 1;
                for i in 1..=d {
                    c[d - i] -= t(i);
                }
                c[m] -= 1;
                for i in 1..=m {
                    c[m - i] += t(i);
                }
                let case = if m == 0 {
                    ParryCase::PurelyPeriodic { p }
                } else {
                    ParryCase::NonSimplePeriodic { m, p }
                };
                Ok(ParryPolynomial {
                    poly: IntPolynomial::new(c),
                    case,
                })
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    /// Naive height (largest coefficient modulus).
    pub fn height(&self) -> BigInt {
        self.poly.height()
    }

    /// The height-two situation singled out by the rational/natural-boundary
    /// dichotomy of {0,±1}-series.
    pub fn has_height_two(&self) -> bool {
        self.height() == BigInt::from(2)
    }

    /// Length `p + 1` of the period, zero in the simple case.
    pub fn period_len(&self) -> usize {
        match self.case {
            ParryCase::Simple { .. } => 0,
            ParryCase::NonSimplePeriodic { p, .. } | ParryCase::PurelyPeriodic { p } => p + 1,
        }
    }

    /// First `n + 1` Taylor coefficients of `−P*(z)` in the simple case and
    /// of `−P*(z)/(1 − z^{p+1})` otherwise (`P*` the reciprocal polynomial).
    /// They equal those of the Parry Upper function built from the digits.
    pub fn upper_function_series(&self, n: usize) -> Vec<BigInt> {
        let rc = self.poly.reciprocal();
        let mut a: Vec<BigInt> = (0..=n).map(|i| -rc.coeff(i)).collect();
        let l = self.period_len();
        if l > 0 {
            for i in l..=n {
                let prev = a[i - l].clone();
                a[i] += prev;
            }
        }
        a
    }
}

/// Coefficients `−1, t_1, t_2, …, t_n` of the Parry Upper function
/// `f_β(z) = −1 + Σ t_i z^i`.
pub fn upper_function_coeffs(w: &DigitWord, n: usize) -> Option<Vec<i64>> {
    let mut out = vec![-1];
    for i in 1..=n {
        out.push(w.t(i)? as i64);
    }
    Some(out)
}

/// Exponents `i ≥ 1` with `t_i ≠ 0`, in increasing order, up to `limit`.
pub fn upper_function_exponents(w: &DigitWord, limit: usize) -> Vec<usize> {
    (1..=limit).filter(|&i| w.t(i).is_some_and(|d| d != 0)).collect()
}

/// Parry polynomial of an expansion whose orbit closed up.
///
/// The result is checked to vanish at `β` exactly when the base is exact.
pub fn parry_polynomial(exp: &BetaExpansion) -> Result<ParryPolynomial> {
    if let ExpansionStatus::HorizonExceeded(h) = exp.status {
        return Err(Error::HorizonExceeded(h));
    }
    let pp = ParryPolynomial::from_word(&exp.word)?;
    let expected = match exp.status {
        ExpansionStatus::Finite(n) => n,
        ExpansionStatus::EventuallyPeriodic { preperiod, period } => preperiod + period,
        ExpansionStatus::HorizonExceeded(_) => unreachable!(),
    };
    if pp.degree() != expected {
        return Err(Error::Inconsistent(format!(
            "Parry polynomial degree {} differs from orbit length {expected}",
            pp.degree()
        )));
    }
    if let BetaSource::Exact(beta) = &exp.beta {
        if !beta.is_root_of(&pp.poly) {
            return Err(Error::Inconsistent(format!(
                "Parry polynomial {} does not vanish at β",
                pp.poly
            )));
        }
    }
    Ok(pp)
}

/// Evaluates `Σ a_i x^{−i−1} − 1` with a rigorous tail envelope: the pair
/// `(lower, upper)` encloses the full series when all digits lie in `{0,1}`.
fn residual_bounds(w: &DigitWord, x: f64, terms: usize) -> (f64, f64) {
    let inv = 1.0 / x;
    let mut s = 0.0;
    let mut pw = inv;
    for i in 0..terms {
        if w.get(i).unwrap_or(0) != 0 {
            s += pw;
        }
        pw *= inv;
    }
    let tail = pw / (1.0 - inv);
    (s - 1.0, s - 1.0 + tail)
}

/// The unique `β ∈ (1, 2)` with `1 = Σ_{i≥0} a_i β^{−i−1}` for a Lyndon word
/// `a_0 a_1 …` over `{0, 1}` with `a_0 = 1`.
///
/// A float bisection on the truncated series brackets `β`; the exact value
/// is then isolated as the root in `(1, 2)` of the Parry polynomial of the
/// word, with its cyclotomic factors removed.
pub fn beta_from_digits(w: &DigitWord) -> Result<AlgebraicNumber> {
    if !w.is_known() {
        return Err(Error::Precondition("word must be finite or eventually periodic".into()));
    }
    if w.get(0) != Some(1) {
        return Err(Error::Precondition("the first digit must be 1".into()));
    }
    let explicit = w.prefix().iter().chain(w.period());
    if explicit.clone().any(|&d| d > 1) {
        return Err(Error::Precondition("digits must lie in {0, 1}".into()));
    }
    if !is_lyndon(w) {
        return Err(Error::NotLyndon);
    }
    let (lo_f, hi_f) = bisect_base(w);
    let pp = ParryPolynomial::from_word(w)?;
    let core = cyclotomic_split(&pp.poly)?.rest;
    let candidates: Vec<AlgebraicNumber> = isolate_real_roots(&core, &RatInterval::ints(1, 2))
        .into_iter()
        .filter(|a| a.cmp_rational(&BigRational::one()) == Ordering::Greater)
        .collect();
    if candidates.len() != 1 {
        return Err(Error::Inconsistent(format!(
            "{} roots of {} in (1, 2), expected one",
            candidates.len(),
            core
        )));
    }
    let beta = candidates.into_iter().next().expect("one candidate");
    let v = beta.to_f64();
    if v < lo_f - 1e-12 || v > hi_f + 1e-12 {
        return Err(Error::Inconsistent(format!(
            "exact root {v} outside the series bracket [{lo_f}, {hi_f}]"
        )));
    }
    let mut m = beta.minpoly().clone();
    if m.leading().is_negative() {
        m = -m;
    }
    let iso = beta.isolator();
    AlgebraicNumber::new(&m, iso.lo, iso.hi)
}

/// Bracket `[lo, hi]` of the base by float bisection; the residual is
/// decreasing in `x`.
fn bisect_base(w: &DigitWord) -> (f64, f64) {
    let (mut lo, mut hi): (f64, f64) = (1.0 + 1e-12, 2.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        // Enough terms for the tail to drop below 2^{-60}.
        let terms = ((60.0 * std::f64::consts::LN_2 / mid.ln()).ceil() as usize).clamp(8, 1 << 22);
        let (rl, rh) = residual_bounds(w, mid, terms);
        if rl > 0.0 {
            lo = mid;
        } else if rh < 0.0 {
            hi = mid;
        } else {
            break;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    (lo, hi)
}
