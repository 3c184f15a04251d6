//! Dyadic rationals `m·2^e` and outward-rounded dyadic intervals.
//!
//! These are the exact "binary floats" of the crate: every certified decision
//! (signs of polynomials at isolator endpoints, floors of orbit elements) is
//! made with them, never with hardware floats.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPolynomial;

/// Exact dyadic rational `mantissa · 2^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    mantissa: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mantissa, exp };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic::new(BigInt::zero(), 0)
    }

    pub fn from_int(k: impl Into<BigInt>) -> Self {
        Dyadic::new(k.into(), 0)
    }

    /// Exact conversion of a finite `f64`.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        if x == 0.0 {
            return Some(Self::zero());
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let e = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, ex) = if e == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), e - 1075)
        };
        Some(Dyadic::new(BigInt::from(m) * sign, ex))
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mantissa.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mantissa >>= tz as usize;
            self.exp += tz as i64;
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn signum(&self) -> i8 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mantissa: self.mantissa.abs(),
            exp: self.exp,
        }
    }

    /// Multiplication by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic {
            mantissa: self.mantissa.clone(),
            exp: self.exp + k,
        }
    }

    /// `(self + other)/2`.
    pub fn midpoint(&self, other: &Self) -> Self {
        (self + other).mul_pow2(-1)
    }

    /// Number of significant bits of the mantissa.
    pub fn bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// Rounds to at most `prec` significant bits, toward −∞ (`up = false`) or
    /// +∞ (`up = true`).
    pub fn round(&self, prec: u32, up: bool) -> Self {
        let b = self.mantissa.bits();
        if b <= prec as u64 {
            return self.clone();
        }
        let drop = (b - prec as u64) as usize;
        // Arithmetic shift floors toward −∞ for negative mantissas too.
        let mut m = &self.mantissa >> drop;
        let exact = (&m << drop) == self.mantissa;
        if up && !exact {
            m += 1;
        }
        Dyadic::new(m, self.exp + drop as i64)
    }

    /// Quotient truncated toward zero with about `prec` significant bits.
    pub fn div(&self, other: &Self, prec: u32) -> Self {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let shift = (prec as i64 + other.bits() as i64 - self.bits() as i64 + 2).max(0);
        let m = (&self.mantissa << shift as usize) / &other.mantissa;
        Dyadic::new(m, self.exp - other.exp - shift)
    }

    /// `⌊self⌋`.
    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mantissa << (self.exp as usize)
        } else {
            &self.mantissa >> ((-self.exp) as usize)
        }
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mantissa << (self.exp as usize))
        } else {
            BigRational::new(
                self.mantissa.clone(),
                BigInt::one() << ((-self.exp) as usize),
            )
        }
    }

    /// Largest dyadic with `prec`-bit denominator not above `q` (or smallest
    /// not below when `up`).
    pub fn from_rational(q: &BigRational, frac_bits: u32, up: bool) -> Self {
        let scaled = q * BigRational::from_integer(BigInt::one() << frac_bits as usize);
        let m = if up { scaled.ceil() } else { scaled.floor() };
        Dyadic::new(m.to_integer(), -(frac_bits as i64))
    }

    /// Nearest `f64` (correctly rounded up to one ulp).
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(60, false);
        let m = r.mantissa.to_f64().unwrap_or(f64::NAN);
        let e = r.exp;
        if e > 2000 {
            return m.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        // Split the power to avoid intermediate overflow.
        let half = e / 2;
        m * 2f64.powi(half as i32) * 2f64.powi((e - half) as i32)
    }

    /// Decimal rendering with `digits` digits after the point, truncated.
    pub fn to_decimal(&self, digits: usize) -> String {
        let q = self.to_rational();
        let neg = q.is_negative();
        let a = q.abs();
        let scale = BigInt::from(10).pow(digits as u32);
        let v = (a * BigRational::from_integer(scale.clone())).floor().to_integer();
        let ip = &v / &scale;
        let fp = &v % &scale;
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        s.push_str(&ip.to_string());
        if digits > 0 {
            s.push('.');
            let f = fp.to_string();
            s.push_str(&"0".repeat(digits - f.len()));
            s.push_str(&f);
        }
        s
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(f.precision().unwrap_or(20)))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

fn align(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
    let e = a.exp.min(b.exp);
    (
        &a.mantissa << ((a.exp - e) as usize),
        &b.mantissa << ((b.exp - e) as usize),
        e,
    )
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, e) = align(self, rhs);
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mantissa * &rhs.mantissa, self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exp: self.exp,
        }
    }
}

/// Closed interval `[lo, hi]` with dyadic endpoints. Arithmetic rounds
/// outward to the configured number of significant bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_int(k: impl Into<BigInt>) -> Self {
        Self::point(Dyadic::from_int(k))
    }

    /// Enclosure of a rational with `frac_bits` fractional bits.
    pub fn from_rational(q: &BigRational, frac_bits: u32) -> Self {
        Interval {
            lo: Dyadic::from_rational(q, frac_bits, false),
            hi: Dyadic::from_rational(q, frac_bits, true),
        }
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    /// Sign of every point of the interval, `None` if it straddles zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.signum() > 0 {
            Some(1)
        } else if self.hi.signum() < 0 {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    fn rounded(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        Interval {
            lo: lo.round(prec, false),
            hi: hi.round(prec, true),
        }
    }

    pub fn add(&self, o: &Self, prec: u32) -> Self {
        Self::rounded(&self.lo + &o.lo, &self.hi + &o.hi, prec)
    }

    pub fn sub(&self, o: &Self, prec: u32) -> Self {
        Self::rounded(&self.lo - &o.hi, &self.hi - &o.lo, prec)
    }

    pub fn mul(&self, o: &Self, prec: u32) -> Self {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Self::rounded(lo, hi, prec)
    }

    pub fn add_int(&self, k: &BigInt, prec: u32) -> Self {
        self.add(&Interval::from_int(k.clone()), prec)
    }

    /// Interval Horner evaluation of an integer polynomial.
    pub fn eval_poly(p: &IntPolynomial, x: &Interval, prec: u32) -> Interval {
        let mut acc = Interval::from_int(0);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(x, prec).add_int(c, prec);
        }
        acc
    }

    pub fn to_f64_mid(&self) -> f64 {
        self.lo.midpoint(&self.hi).to_f64()
    }
}
