//! Real algebraic numbers: Descartes/bisection isolation, exact sign
//! evaluation and refinement. Sturm sequences are provided as an independent
//! counting oracle.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dyadic::{Dyadic, Interval};
use super::poly::IntPolynomial;
use crate::error::{precondition, Error, Result};

/// Open interval `(lo, hi)` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        RatInterval { lo, hi }
    }

    pub fn ints(lo: i64, hi: i64) -> Self {
        RatInterval {
            lo: BigRational::from_integer(lo.into()),
            hi: BigRational::from_integer(hi.into()),
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

/// Exact value of a decimal literal such as `-1.25` or `3`.
pub fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad decimal {s:?}"));
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("0{int}{frac}").parse().map_err(|_| bad())?;
    let q = BigRational::new(digits, BigInt::from(10).pow(frac.len() as u32));
    Ok(if neg { -q } else { q })
}

impl FromStr for RatInterval {
    type Err = Error;

    /// `"lo,hi"` with decimal endpoints, e.g. `"1,2"` or `"1.17,1.18"`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected \"lo,hi\", got {s:?}")))?;
        let (lo, hi) = (parse_decimal(a)?, parse_decimal(b)?);
        if lo >= hi {
            return Err(Error::Precondition(format!("empty interval {s:?}")));
        }
        Ok(RatInterval { lo, hi })
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn is_dyadic(q: &BigRational) -> bool {
    let d = q.denom();
    d.is_positive() && (d & (d - BigInt::one())).is_zero()
}

fn rational_to_dyadic(q: &BigRational) -> Option<Dyadic> {
    if !is_dyadic(q) {
        return None;
    }
    let k = q.denom().bits() - 1;
    Some(Dyadic::new(q.numer().clone(), -(k as i64)))
}

/// Exact sign of `p` at a dyadic point. Interval evaluation at growing
/// precision is tried first; exact dyadic Horner settles the rest.
pub fn sign_at_dyadic(p: &IntPolynomial, x: &Dyadic) -> i8 {
    let deg = p.deg() as u64;
    let exact_cost = deg.saturating_mul(x.bits().max(1));
    if exact_cost > 4096 {
        let xi = Interval::point(x.clone());
        let mut prec = 128u32;
        while (prec as u64) < exact_cost {
            if let Some(s) = Interval::eval_poly(p, &xi, prec).sign() {
                if s != 0 {
                    return s;
                }
            }
            prec = prec.saturating_mul(4);
        }
    }
    let mut acc = Dyadic::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * x) + &Dyadic::from_int(c.clone());
    }
    acc.signum()
}

/// Exact sign of `p` at a rational point.
pub fn sign_at_rational(p: &IntPolynomial, q: &BigRational) -> i8 {
    if let Some(d) = rational_to_dyadic(q) {
        return sign_at_dyadic(p, &d);
    }
    // Homogenized Horner: den^deg · p(num/den) is an integer with the same
    // sign as p(q) because den > 0.
    let (n, d) = (q.numer(), q.denom());
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        acc = acc * n + c * &dpow;
        if i > 0 {
            dpow *= d;
        }
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// `F(y) = s^deg · q(a + (b − a)·y)` with integer coefficients, the
/// polynomial whose roots in `(0,1)` are those of `q` in `(a,b)`.
fn affine_transform(q: &IntPolynomial, a: &BigRational, b: &BigRational) -> Vec<BigInt> {
    let w = b - a;
    let s = a.denom() * w.denom() / a.denom().gcd(w.denom());
    let lin_a = (a * BigRational::from_integer(s.clone())).to_integer();
    let lin_b = (&w * BigRational::from_integer(s.clone())).to_integer();
    let deg = q.deg();
    let mut h: Vec<BigInt> = vec![q.leading()];
    let mut spow = BigInt::one();
    for i in (0..deg).rev() {
        spow *= &s;
        let mut nh = vec![BigInt::zero(); h.len() + 1];
        for (k, c) in h.iter().enumerate() {
            nh[k] += c * &lin_a;
            nh[k + 1] += c * &lin_b;
        }
        nh[0] += q.coeff(i) * &spow;
        h = nh;
    }
    while h.last().is_some_and(|c| c.is_zero()) {
        h.pop();
    }
    h
}

fn sign_variations(v: &[BigInt]) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for c in v {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Descartes bound for roots of `f` in the open interval `(0,1)`:
/// sign variations of `(1+y)^d f(1/(1+y))`.
fn descartes_01(f: &[BigInt]) -> usize {
    let mut r: Vec<BigInt> = f.iter().rev().cloned().collect();
    taylor_shift_one(&mut r);
    sign_variations(&r)
}

fn taylor_shift_one(v: &mut [BigInt]) {
    let n = v.len();
    for i in 0..n {
        for k in (i..n.saturating_sub(1)).rev() {
            let t = v[k + 1].clone();
            v[k] += t;
        }
    }
}

/// Number of roots of `q` in `(a,b)` bounded above by Descartes' rule; exact
/// when it returns 0 or 1.
pub fn descartes_count(q: &IntPolynomial, a: &BigRational, b: &BigRational) -> usize {
    descartes_01(&affine_transform(q, a, b))
}

/// A real algebraic number: a squarefree primitive integer polynomial and a
/// rational isolator holding exactly one of its real roots.
///
/// Either `lo == hi` (an exact rational root) or the polynomial takes
/// nonzero values of opposite signs at the two endpoints.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    poly: IntPolynomial,
    lo: BigRational,
    hi: BigRational,
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraicNumber({} in [{}, {}] ≈ {})",
            self.poly,
            self.lo,
            self.hi,
            self.to_f64()
        )
    }
}

impl AlgebraicNumber {
    /// Builds from a polynomial and an isolator, checking the invariants.
    pub fn new(poly: &IntPolynomial, lo: BigRational, hi: BigRational) -> Result<Self> {
        if poly.deg() == 0 {
            return precondition("algebraic number needs a nonconstant polynomial");
        }
        let poly = poly.squarefree_part();
        if lo > hi {
            return precondition("isolator endpoints out of order");
        }
        if lo == hi {
            if sign_at_rational(&poly, &lo) != 0 {
                return precondition("point isolator is not a root");
            }
            return Ok(AlgebraicNumber { poly, lo, hi });
        }
        let sl = sign_at_rational(&poly, &lo);
        let sh = sign_at_rational(&poly, &hi);
        if sl * sh >= 0 || descartes_count(&poly, &lo, &hi) != 1 {
            return precondition("isolator does not hold exactly one simple root");
        }
        Ok(AlgebraicNumber { poly, lo, hi })
    }

    /// Exact rational (degenerate isolator).
    pub fn from_rational(q: BigRational) -> Self {
        let poly = IntPolynomial::new(vec![-q.numer().clone(), q.denom().clone()]);
        AlgebraicNumber {
            poly,
            lo: q.clone(),
            hi: q,
        }
    }

    /// The unique root of `poly` (increasing or decreasing through zero) in
    /// the given range, for callers that know uniqueness in advance.
    pub(crate) fn new_unchecked(poly: IntPolynomial, lo: BigRational, hi: BigRational) -> Self {
        AlgebraicNumber { poly, lo, hi }
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn isolator(&self) -> RatInterval {
        RatInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn is_exact_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Dyadic enclosure of the root with `frac_bits` fractional bits of slack
    /// on each side of the current isolator.
    pub fn enclosure(&self, frac_bits: u32) -> Interval {
        Interval::new(
            Dyadic::from_rational(&self.lo, frac_bits, false),
            Dyadic::from_rational(&self.hi, frac_bits, true),
        )
    }

    fn sign_hi(&self) -> i8 {
        sign_at_rational(&self.poly, &self.hi)
    }

    /// One bisection step; returns the halved isolator.
    pub fn bisect(&self) -> Self {
        if self.is_exact_point() {
            return self.clone();
        }
        let mid = (&self.lo + &self.hi) / rat(2);
        let sm = sign_at_rational(&self.poly, &mid);
        if sm == 0 {
            return AlgebraicNumber {
                poly: self.poly.clone(),
                lo: mid.clone(),
                hi: mid,
            };
        }
        if sm == self.sign_hi() {
            AlgebraicNumber {
                poly: self.poly.clone(),
                lo: self.lo.clone(),
                hi: mid,
            }
        } else {
            AlgebraicNumber {
                poly: self.poly.clone(),
                lo: mid,
                hi: self.hi.clone(),
            }
        }
    }

    /// Shrinks the isolator to width at most `2^{-k}`.
    pub fn shrink_to(&self, k: u32) -> Self {
        let target = BigRational::new(BigInt::one(), BigInt::one() << k as usize);
        let mut a = self.clone();
        if a.hi.clone() - a.lo.clone() <= target {
            return a;
        }
        // Jump start from a hardware-float estimate when it brackets the root.
        if let Some(b) = a.float_bracket() {
            a = b;
        }
        while &a.hi - &a.lo > target {
            a = a.bisect();
        }
        a
    }

    fn float_bracket(&self) -> Option<Self> {
        let x0 = self.to_f64_rough();
        let coeffs = self.poly.to_f64_coeffs();
        let mut x = x0;
        for _ in 0..60 {
            let (mut p, mut dp) = (0.0, 0.0);
            for c in coeffs.iter().rev() {
                dp = dp * x + p;
                p = p * x + c;
            }
            if dp == 0.0 || !p.is_finite() {
                return None;
            }
            let nx = x - p / dp;
            if (nx - x).abs() <= 1e-16 * x.abs().max(1e-300) {
                x = nx;
                break;
            }
            x = nx;
        }
        let delta = (x.abs() * 2f64.powi(-45)).max(1e-300);
        let lo = BigRational::from_float(x - delta)?;
        let hi = BigRational::from_float(x + delta)?;
        if lo <= self.lo || hi >= self.hi {
            return None;
        }
        let sl = sign_at_rational(&self.poly, &lo);
        let sh = sign_at_rational(&self.poly, &hi);
        if sl != 0 && sh != 0 && sl != sh && sh == self.sign_hi() {
            Some(AlgebraicNumber {
                poly: self.poly.clone(),
                lo,
                hi,
            })
        } else {
            None
        }
    }

    fn to_f64_rough(&self) -> f64 {
        let l = self.lo.to_f64().unwrap_or(0.0);
        let h = self.hi.to_f64().unwrap_or(0.0);
        0.5 * (l + h)
    }

    /// Refines to `bits` bits of relative accuracy. Returns the midpoint as a
    /// dyadic and the shrunken number.
    pub fn refine(&self, bits: u32) -> (Dyadic, AlgebraicNumber) {
        let bits = bits.max(2);
        if self.is_exact_point() {
            let d = rational_to_dyadic(&self.lo)
                .unwrap_or_else(|| Dyadic::from_rational(&self.lo, bits + 64, false));
            return (d, self.clone());
        }
        let mut a = self.clone();
        // Separate the root from zero to fix the scale of relative error.
        while !a.is_exact_point() && !a.lo.is_positive() && !a.hi.is_negative() {
            a = a.bisect();
        }
        loop {
            if a.is_exact_point() {
                return a.refine(bits);
            }
            let m = a.lo.abs().min(a.hi.abs());
            let bound = &m * BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
            if &a.hi - &a.lo <= bound {
                break;
            }
            let lm = m.to_f64().map(|v| v.log2().floor()).unwrap_or(0.0) as i64;
            let k = (bits as i64).saturating_sub(lm).saturating_add(1).max(0) as u32;
            a = a.shrink_to(k);
        }
        let mid = (&a.lo + &a.hi) / rat(2);
        let d = rational_to_dyadic(&mid)
            .unwrap_or_else(|| Dyadic::from_rational(&mid, bits + 64, false));
        (d, a)
    }

    /// Double-precision value (53-bit refinement).
    pub fn to_f64(&self) -> f64 {
        self.refine(56).0.to_f64()
    }

    /// Certified comparison with a rational.
    pub fn cmp_rational(&self, q: &BigRational) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        if self.is_exact_point() {
            return self.lo.cmp(q);
        }
        if q <= &self.lo {
            return Greater;
        }
        if q >= &self.hi {
            return Less;
        }
        let s = sign_at_rational(&self.poly, q);
        if s == 0 {
            return Equal;
        }
        if s == self.sign_hi() {
            Less
        } else {
            Greater
        }
    }

    /// Exact decision whether `p` vanishes at this number: a common factor of
    /// `p` and the defining polynomial must have a root inside the isolator.
    pub fn is_root_of(&self, p: &IntPolynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        if self.is_exact_point() {
            return sign_at_rational(p, &self.lo) == 0;
        }
        let g = self.poly.gcd(p);
        if g.deg() == 0 {
            return false;
        }
        let sl = sign_at_rational(&g, &self.lo);
        let sh = sign_at_rational(&g, &self.hi);
        sl * sh < 0
    }
}

/// Isolates every real root of `p` in the open interval `range`.
/// The returned numbers are sorted and their isolators pairwise disjoint.
pub fn isolate_real_roots(p: &IntPolynomial, range: &RatInterval) -> Vec<AlgebraicNumber> {
    if p.deg() == 0 || range.lo >= range.hi {
        return Vec::new();
    }
    let q = p.squarefree_part();
    let (a, b) = (&range.lo, &range.hi);
    let w = b - a;
    let f = affine_transform(&q, a, b);
    let mut found: Vec<(BigRational, BigRational)> = Vec::new();
    let mut stack: Vec<(Vec<BigInt>, BigInt, u32)> = vec![(f, BigInt::zero(), 0)];
    let to_x = |k: &BigInt, m: u32| -> BigRational {
        a + &w * BigRational::new(k.clone(), BigInt::one() << m as usize)
    };
    while let Some((f, k, m)) = stack.pop() {
        let v = descartes_01(&f);
        if v == 0 {
            continue;
        }
        if v == 1 {
            found.push((to_x(&k, m), to_x(&(&k + 1), m)));
            continue;
        }
        let d = f.len() - 1;
        // L(y) = 2^d f(y/2),  R(y) = L(y+1)
        let left: Vec<BigInt> = f
            .iter()
            .enumerate()
            .map(|(i, c)| c << (d - i))
            .collect();
        let mut right = left.clone();
        taylor_shift_one(&mut right);
        if right[0].is_zero() {
            let mid = to_x(&(2 * &k + 1), m + 1);
            found.push((mid.clone(), mid));
        }
        stack.push((right, 2 * &k + 1, m + 1));
        stack.push((left, 2 * &k, m + 1));
    }
    let mut out: Vec<AlgebraicNumber> = found
        .into_iter()
        .map(|(lo, hi)| clean_isolator(&q, lo, hi))
        .collect();
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Moves isolator endpoints that happen to be roots (midpoints of ancestor
/// bisections) strictly inward.
fn clean_isolator(q: &IntPolynomial, lo: BigRational, hi: BigRational) -> AlgebraicNumber {
    if lo == hi {
        return AlgebraicNumber::new_unchecked(q.clone(), lo, hi);
    }
    let (mut lo, mut hi) = (lo, hi);
    let two = rat(2);
    if sign_at_rational(q, &lo) == 0 {
        let mut step = (&hi - &lo) / &two;
        loop {
            let cand = &lo + &step;
            if sign_at_rational(q, &cand) != 0 && descartes_count(q, &cand, &hi) == 1 {
                lo = cand;
                break;
            }
            step /= &two;
        }
    }
    if sign_at_rational(q, &hi) == 0 {
        let mut step = (&hi - &lo) / &two;
        loop {
            let cand = &hi - &step;
            if sign_at_rational(q, &cand) != 0 && descartes_count(q, &lo, &cand) == 1 {
                hi = cand;
                break;
            }
            step /= &two;
        }
    }
    AlgebraicNumber::new_unchecked(q.clone(), lo, hi)
}

/// Refines `a` and returns a 53-bit value; the returned number carries the
/// shrunken isolator.
pub fn refine(a: &AlgebraicNumber, bits: u32) -> (Dyadic, AlgebraicNumber) {
    a.refine(bits)
}

/// Sturm sequence of `p` (with positive scalings only, so signs are those of
/// the rational sequence).
pub fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.is_zero() {
            seq.pop();
            break;
        }
        let r = signed_prem(a, b);
        if r.is_zero() {
            break;
        }
        let g = r.content();
        let r = IntPolynomial::new(r.coeffs().iter().map(|c| -(c / &g)).collect());
        seq.push(r);
    }
    seq
}

/// Remainder of `a` by `b` times a positive constant.
fn signed_prem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.deg();
    let lc = b.leading();
    let lca = lc.abs();
    let sg = lc.signum();
    let mut r = a.coeffs().to_vec();
    while r.len() > db && !r.is_empty() {
        let top = r.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = r.len() - db;
        for c in r.iter_mut() {
            *c *= &lca;
        }
        for (i, c) in b.coeffs().iter().enumerate().take(db) {
            r[k + i] -= &top * c * &sg;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    IntPolynomial::new(r)
}

fn sturm_variations(seq: &[IntPolynomial], x: &BigRational) -> usize {
    let signs: Vec<BigInt> = seq
        .iter()
        .map(|p| BigInt::from(sign_at_rational(p, x)))
        .collect();
    sign_variations(&signs)
}

/// Number of distinct real roots of `p` in `(a, b]` by Sturm's theorem.
pub fn sturm_count(p: &IntPolynomial, a: &BigRational, b: &BigRational) -> usize {
    if p.deg() == 0 {
        return 0;
    }
    let seq = sturm_sequence(p);
    sturm_variations(&seq, a).saturating_sub(sturm_variations(&seq, b))
}

/// Cauchy bound: every complex root has modulus below it.
pub fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let lc = p.leading().abs();
    let m = p.coeffs()[..p.deg()]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    BigRational::new(m, lc) + rat(1)
}

/// The largest real root of `p` exceeding 1, if any.
pub fn largest_real_root_above_one(p: &IntPolynomial) -> Option<AlgebraicNumber> {
    let hi = cauchy_bound(p) + rat(1);
    isolate_real_roots(p, &RatInterval::new(rat(1), hi)).pop()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn interval_literals() {
        let r: RatInterval = "1.17,1.18".parse().unwrap();
        assert_eq!(r.lo, BigRational::new(117.into(), 100.into()));
        assert_eq!("-2,.5".parse::<RatInterval>().unwrap().hi, BigRational::new(1.into(), 2.into()));
        assert!("2,1".parse::<RatInterval>().is_err());
        assert!("1;2".parse::<RatInterval>().is_err());
        assert!(parse_decimal("1e5").is_err());
    }

    #[test]
    fn largest_root() {
        let lehmer = IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let b = largest_real_root_above_one(&lehmer).unwrap();
        assert!((b.to_f64() - 1.176_280_818_259_917).abs() < 1e-12);
        assert!(largest_real_root_above_one(&IntPolynomial::from_i64(&[1, 0, 1])).is_none());
    }

    #[test]
    fn golden_mean_inverse() {
        let r = isolate_real_roots(&p(&[-1, -1, 1]), &RatInterval::ints(0, 1));
        assert!(r.is_empty());
        let r = isolate_real_roots(&p(&[-1, 1, 1]), &RatInterval::ints(0, 1));
        assert_eq!(r.len(), 1);
        let (v, _) = r[0].refine(10);
        assert!((v.to_f64() - 0.618034).abs() < 2f64.powi(-9));
    }

    #[test]
    fn theta5_and_no_real_roots() {
        let r = isolate_real_roots(&IntPolynomial::trinomial(5), &RatInterval::ints(0, 1));
        assert_eq!(r.len(), 1);
        let v = r[0].refine(53).0.to_f64();
        assert!((v - 0.754_877_666_2).abs() < 1e-10);
        assert!((1.0 / v - 1.324_717_957).abs() < 1e-8);
        assert!(isolate_real_roots(&p(&[1, 0, 1]), &RatInterval::ints(-2, 2)).is_empty());
    }

    #[test]
    fn rational_roots_at_bisection_points() {
        // (2x−1)(x)(4x−3)(x−1)·(x² − 2)
        let f = &(&(&p(&[-1, 2]) * &p(&[0, 1])) * &(&p(&[-3, 4]) * &p(&[-1, 1]))) * &p(&[-2, 0, 1]);
        let r = isolate_real_roots(&f, &RatInterval::ints(-2, 2));
        assert_eq!(r.len(), 6);
        let vals: Vec<f64> = r.iter().map(|a| a.to_f64()).collect();
        let want = [-2f64.sqrt(), 0.0, 0.5, 0.75, 1.0, 2f64.sqrt()];
        for (v, w) in vals.iter().zip(want) {
            assert!((v - w).abs() < 1e-12, "{vals:?}");
        }
        assert_eq!(sturm_count(&f, &rat(-2), &rat(2)), 6);
    }

    #[test]
    fn refine_to_eighty_bits() {
        let r = isolate_real_roots(&IntPolynomial::trinomial(31), &RatInterval::ints(0, 1));
        let (v, a) = r[0].refine(80);
        let w = a.isolator().width();
        assert!(w < BigRational::new(1.into(), BigInt::one() << 79usize));
        assert!((1.0 / v.to_f64() - 1.08544).abs() < 1e-5);
    }

    #[test]
    fn root_membership() {
        let r = isolate_real_roots(&IntPolynomial::trinomial(5), &RatInterval::ints(0, 1));
        // G_5 = (X²−X+1)(X³+X²−1)
        assert!(r[0].is_root_of(&p(&[-1, 0, 1, 1])));
        assert!(!r[0].is_root_of(&p(&[-1, 1, 1])));
    }
}
