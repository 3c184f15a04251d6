//! Exact arithmetic in ℤ[X]/(P) for a monic modulus `P`, and certified
//! floors of ring elements evaluated at a real root of `P`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::dyadic::Interval;
use super::poly::IntPolynomial;
use super::real::AlgebraicNumber;
use crate::error::{Error, Result};

/// Canonical representative of a class in ℤ[X]/(modulus): a coefficient
/// vector of length `deg(modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    modulus: Arc<IntPolynomial>,
    coeffs: Vec<BigInt>,
}

impl RingElement {
    pub fn modulus(&self) -> &IntPolynomial {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Shared handle on the modulus, cheap to clone.
    pub fn modulus_handle(&self) -> Arc<IntPolynomial> {
        Arc::clone(&self.modulus)
    }

    pub fn from_int(modulus: Arc<IntPolynomial>, k: BigInt) -> Self {
        let d = modulus.deg();
        let mut coeffs = vec![BigInt::zero(); d];
        if d > 0 {
            coeffs[0] = k;
        }
        RingElement { modulus, coeffs }
    }

    pub fn one(modulus: Arc<IntPolynomial>) -> Self {
        Self::from_int(modulus, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Exact test `self == k`, valid as an identity in the quotient ring.
    pub fn equals_int(&self, k: &BigInt) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| if i == 0 { c == k } else { c.is_zero() })
    }

    pub fn to_poly(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.clone())
    }

    /// Multiplication by the class of `X`: one shift and one reduction step.
    pub fn mul_x(&self) -> Self {
        let d = self.coeffs.len();
        if d == 0 {
            return self.clone();
        }
        let top = self.coeffs[d - 1].clone();
        let mut v = Vec::with_capacity(d);
        v.push(BigInt::zero());
        v.extend(self.coeffs[..d - 1].iter().cloned());
        if !top.is_zero() {
            for (i, m) in self.modulus.coeffs()[..d].iter().enumerate() {
                v[i] -= &top * m;
            }
        }
        RingElement {
            modulus: Arc::clone(&self.modulus),
            coeffs: v,
        }
    }

    pub fn sub_int(&self, k: &BigInt) -> Self {
        let mut r = self.clone();
        if !r.coeffs.is_empty() {
            r.coeffs[0] -= k;
        }
        r
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        RingElement {
            modulus: Arc::clone(&self.modulus),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        RingElement {
            modulus: Arc::clone(&self.modulus),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let prod = &self.to_poly() * &o.to_poly();
        reduce_with(&self.modulus, &prod)
    }

    /// Enclosure of the value at a real root given by an isolator.
    pub fn eval_interval(&self, at: &Interval, prec: u32) -> Interval {
        Interval::eval_poly(&self.to_poly(), at, prec)
    }
}

fn reduce_with(m: &Arc<IntPolynomial>, e: &IntPolynomial) -> RingElement {
    let d = m.deg();
    let (_, r) = e.div_rem(m).expect("monic division is exact");
    let mut coeffs = r.into_coeffs();
    coeffs.resize(d, BigInt::zero());
    RingElement {
        modulus: Arc::clone(m),
        coeffs,
    }
}

/// Canonical remainder of `e` modulo the monic polynomial `m`.
pub fn reduce_mod(e: &IntPolynomial, m: &IntPolynomial) -> Result<RingElement> {
    if !m.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok(reduce_with(&Arc::new(m.clone()), e))
}

/// Options for [`certified_floor_with`].
#[derive(Clone, Copy, Debug)]
pub struct FloorOptions {
    /// Decide exact-integer values by the ring identity test.
    pub exact_test: bool,
    /// Largest isolator refinement tried, in bits.
    pub max_bits: u32,
}

impl Default for FloorOptions {
    fn default() -> Self {
        FloorOptions {
            exact_test: true,
            max_bits: 4096,
        }
    }
}

/// `⌊x(β)⌋` where `β` is the real root isolated by `at`.
pub fn certified_floor(x: &RingElement, at: &AlgebraicNumber) -> Result<BigInt> {
    let mut a = at.clone();
    certified_floor_with(x, &mut a, FloorOptions::default())
}

/// As [`certified_floor`], keeping the refined isolator in `at` so repeated
/// calls (one per digit of an expansion) reuse it.
pub fn certified_floor_with(
    x: &RingElement,
    at: &mut AlgebraicNumber,
    opts: FloorOptions,
) -> Result<BigInt> {
    floor_and_exactness(x, at, opts).map(|(k, _)| k)
}

/// The floor of `x(β)` together with whether `x(β)` is exactly that integer.
///
/// Exactness is only ever asserted through the ring identity test (or a
/// common root of `x − k` and the modulus inside the isolator); when the
/// enclosure stays clear of every integer the value is known not to be one.
pub fn floor_and_exactness(
    x: &RingElement,
    at: &mut AlgebraicNumber,
    opts: FloorOptions,
) -> Result<(BigInt, bool)> {
    let poly = x.to_poly();
    let mut k = 64u32;
    let mut rejected: Option<BigInt> = None;
    loop {
        *at = at.shrink_to(k);
        let enc = at.enclosure(k + 16);
        let v = Interval::eval_poly(&poly, &enc, k + 64);
        let (first, last) = (v.lo.ceil(), v.hi.floor());
        if first > last {
            return Ok((v.lo.floor(), false));
        }
        if first == last && opts.exact_test && rejected.as_ref() != Some(&first) {
            if x.equals_int(&first)
                || at.is_root_of(&(&poly - &IntPolynomial::constant(first.clone())))
            {
                return Ok((first, true));
            }
            rejected = Some(first);
        }
        if k >= opts.max_bits {
            return Err(Error::PrecisionExhausted {
                bits: k,
                what: format!("deciding the floor of {poly} at {at:?}"),
            });
        }
        k = (k * 2).min(opts.max_bits);
    }
}

/// Sign of `q(β)` at the root isolated by `at`, exact when `q(β) = 0`.
pub fn certified_sign(q: &IntPolynomial, at: &mut AlgebraicNumber, max_bits: u32) -> Result<i8> {
    if q.is_zero() {
        return Ok(0);
    }
    let mut k = 64u32;
    let mut tested = false;
    loop {
        *at = at.shrink_to(k);
        let enc = at.enclosure(k + 16);
        let v = Interval::eval_poly(q, &enc, k + 64);
        if let Some(s) = v.sign() {
            if s != 0 {
                return Ok(s);
            }
        }
        if !tested {
            if at.is_root_of(q) {
                return Ok(0);
            }
            tested = true;
        }
        if k >= max_bits {
            return Err(Error::PrecisionExhausted {
                bits: k,
                what: format!("deciding the sign of {q} at {at:?}"),
            });
        }
        k = (k * 2).min(max_bits);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::real::{isolate_real_roots, RatInterval};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn reductions() {
        let m = p(&[-1, -1, 1]);
        assert_eq!(reduce_mod(&p(&[0, 0, 1]), &m).unwrap().coeffs(), &[1.into(), 1.into()]);
        let g5 = p(&[-1, 1, 0, 0, 0, 1]);
        let r = reduce_mod(&p(&[0, 0, 0, 0, 0, 1]), &g5).unwrap();
        assert_eq!(r.to_poly(), p(&[1, -1]));
        assert!(reduce_mod(&IntPolynomial::zero(), &m).unwrap().is_zero());
        assert_eq!(reduce_mod(&p(&[1]), &p(&[1, 2])), Err(Error::NotMonic));
    }

    #[test]
    fn mul_x_matches_full_reduction() {
        let m = Arc::new(p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]));
        let mut e = RingElement::one(Arc::clone(&m));
        for k in 1..40 {
            e = e.mul_x();
            let direct = reduce_with(&m, &IntPolynomial::monomial(1, k));
            assert_eq!(e, direct);
        }
    }

    #[test]
    fn floors() {
        let m = p(&[-1, -1, 1]);
        let phi = isolate_real_roots(&m, &RatInterval::ints(1, 2)).remove(0);
        let beta = reduce_mod(&p(&[0, 1]), &m).unwrap();
        assert_eq!(certified_floor(&beta, &phi).unwrap(), BigInt::from(1));
        let one = reduce_mod(&p(&[1]), &m).unwrap();
        assert_eq!(certified_floor(&one, &phi).unwrap(), BigInt::from(1));
        // φ² − φ = 1 exactly.
        let e = reduce_mod(&p(&[0, -1, 1]), &m).unwrap();
        assert_eq!(certified_floor(&e, &phi).unwrap(), BigInt::from(1));
        // β·T(1) at β = θ_5⁻¹: T(1) = β − 1, so β² − β ∈ (0,1).
        let m5 = p(&[-1, -1, 0, 1]);
        let th = isolate_real_roots(&m5, &RatInterval::ints(1, 2)).remove(0);
        let x = reduce_mod(&p(&[0, -1, 1]), &m5).unwrap();
        assert_eq!(certified_floor(&x, &th).unwrap(), BigInt::zero());
    }
}
