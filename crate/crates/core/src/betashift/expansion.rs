//! Greedy Rényi expansions `d_β(1)` with exact orbits in ℤ[β].

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::word::DigitWord;
use crate::algnum::{floor_and_exactness, AlgebraicNumber, Dyadic, FloorOptions, RingElement};
use crate::error::{Error, Result};

/// Default number of greedy steps before giving up on periodicity.
pub const DEFAULT_HORIZON: usize = 100_000;

/// How the orbit `T_β^j(1)` ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExpansionStatus {
    /// `T_β^N(1) = 0`: `d_β(1)` has exactly `N` digits.
    Finite(usize),
    /// `T_β^m(1) = T_β^{m+period}(1)`; `d_β(1) = t_1…t_m (t_{m+1}…t_{m+period})^ω`.
    EventuallyPeriodic { preperiod: usize, period: usize },
    /// Neither event happened within the given number of steps.
    HorizonExceeded(usize),
}

/// The base of an expansion.
#[derive(Clone, Debug)]
pub enum BetaSource {
    /// Real algebraic integer; the orbit is exact.
    Exact(AlgebraicNumber),
    /// Binary float carried at `bits` bits; digits are not certified.
    Float { value: Dyadic, bits: u32 },
}

impl BetaSource {
    pub fn to_f64(&self) -> f64 {
        match self {
            BetaSource::Exact(a) => a.to_f64(),
            BetaSource::Float { value, .. } => value.to_f64(),
        }
    }
}

/// `d_β(1)` together with the orbit that produced it.
#[derive(Clone, Debug)]
pub struct BetaExpansion {
    pub beta: BetaSource,
    pub word: DigitWord,
    /// Exact remainders `T_β^j(1)`, `j = 0..`, in ℤ[X]/(minpoly). Empty for
    /// float expansions.
    pub remainders: Vec<RingElement>,
    pub status: ExpansionStatus,
}

impl BetaExpansion {
    pub fn is_certified(&self) -> bool {
        matches!(self.beta, BetaSource::Exact(_))
    }

    /// The digits `t_1 … t_k` actually computed.
    pub fn computed_digits(&self) -> Vec<u32> {
        let n = match self.status {
            ExpansionStatus::Finite(n) => n,
            ExpansionStatus::EventuallyPeriodic { preperiod, period } => preperiod + period,
            ExpansionStatus::HorizonExceeded(h) => h,
        };
        self.word.take(n)
    }

    /// Preperiod and period length, if eventually periodic.
    pub fn periodicity(&self) -> Option<(usize, usize)> {
        match self.status {
            ExpansionStatus::EventuallyPeriodic { preperiod, period } => Some((preperiod, period)),
            _ => None,
        }
    }

    pub fn is_parry(&self) -> bool {
        !matches!(self.status, ExpansionStatus::HorizonExceeded(_))
    }
}

/// The real algebraic integer `β > 1` as a monic modulus and an isolator.
fn monic_setup(beta: &AlgebraicNumber) -> Result<(Arc<crate::IntPolynomial>, AlgebraicNumber)> {
    if beta.cmp_rational(&BigRational::one()) != std::cmp::Ordering::Greater {
        return Err(Error::Precondition("the base β must exceed 1".into()));
    }
    let mut m = beta.minpoly().clone();
    if m.leading().is_negative() {
        m = -m;
    }
    if !m.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok((Arc::new(m), beta.clone()))
}

/// Greedy expansion of 1 in base `beta`, run for at most `horizon` digits.
///
/// Digits are exact: each `t_{j+1} = ⌊β·T^j(1)⌋` is decided by interval
/// evaluation with the ring identity test at integer boundaries, and
/// periodicity is detected by exact repetition of a remainder.
pub fn renyi_expansion(beta: &AlgebraicNumber, horizon: usize) -> Result<BetaExpansion> {
    if horizon == 0 {
        return Err(Error::Precondition("horizon must be at least 1".into()));
    }
    let (modulus, mut at) = monic_setup(beta)?;
    let opts = FloorOptions::default();
    let mut r = RingElement::one(Arc::clone(&modulus));
    let mut seen: HashMap<Vec<BigInt>, usize> = HashMap::new();
    seen.insert(r.coeffs().to_vec(), 0);
    let mut digits = Vec::new();
    let mut remainders = vec![r.clone()];
    for j in 1..=horizon {
        let x = r.mul_x();
        let (t, exact) = floor_and_exactness(&x, &mut at, opts)?;
        let digit = t.to_u32().ok_or_else(|| {
            Error::Inconsistent(format!("digit {t} at step {j} is not a small nonnegative integer"))
        })?;
        digits.push(digit);
        r = x.sub_int(&t);
        if exact {
            // The value is 0; store the canonical zero even if the modulus is
            // reducible and the representative is not.
            remainders.push(RingElement::from_int(Arc::clone(&modulus), BigInt::zero()));
            return Ok(BetaExpansion {
                beta: BetaSource::Exact(at),
                word: DigitWord::finite(digits),
                remainders,
                status: ExpansionStatus::Finite(j),
            });
        }
        remainders.push(r.clone());
        if let Some(&i) = seen.get(r.coeffs()) {
            let period = digits[i..].to_vec();
            digits.truncate(i);
            return Ok(BetaExpansion {
                beta: BetaSource::Exact(at),
                word: DigitWord::periodic(digits, period),
                remainders,
                status: ExpansionStatus::EventuallyPeriodic {
                    preperiod: i,
                    period: j - i,
                },
            });
        }
        seen.insert(r.coeffs().to_vec(), j);
    }
    Ok(BetaExpansion {
        beta: BetaSource::Exact(at),
        word: DigitWord::truncated(digits),
        remainders,
        status: ExpansionStatus::HorizonExceeded(horizon),
    })
}

/// Greedy expansion with a binary-float base carried at `bits` bits.
///
/// Nothing is certified: rounding errors are amplified by `β` at every step,
/// so only about `bits / log2 β` digits are meaningful. A remainder that
/// becomes exactly zero in this arithmetic is reported as `Finite`.
pub fn renyi_expansion_float(beta: &Dyadic, bits: u32, horizon: usize) -> Result<BetaExpansion> {
    if beta <= &Dyadic::from_int(1) {
        return Err(Error::Precondition("the base β must exceed 1".into()));
    }
    if horizon == 0 {
        return Err(Error::Precondition("horizon must be at least 1".into()));
    }
    let beta = beta.round(bits, false);
    let mut r = Dyadic::from_int(1);
    let mut digits = Vec::new();
    for j in 1..=horizon {
        let x = (&beta * &r).round(bits, false);
        let t = x.floor();
        digits.push(t.to_u32().unwrap_or(u32::MAX));
        r = &x - &Dyadic::from_int(t);
        if r.is_zero() {
            return Ok(BetaExpansion {
                beta: BetaSource::Float { value: beta, bits },
                word: DigitWord::finite(digits),
                remainders: Vec::new(),
                status: ExpansionStatus::Finite(j),
            });
        }
    }
    Ok(BetaExpansion {
        beta: BetaSource::Float { value: beta, bits },
        word: DigitWord::truncated(digits),
        remainders: Vec::new(),
        status: ExpansionStatus::HorizonExceeded(horizon),
    })
}
