//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients in ascending degree order.
///
/// The representation is kept normalized: no trailing zero coefficients, so
/// the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c·X^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        Self::new(v)
    }

    /// Builds `Σ X^e` over the given exponents, adding `constant` at degree 0.
    /// Repeated exponents accumulate.
    pub fn from_exponents(constant: i64, exponents: &[usize]) -> Self {
        let top = exponents.iter().copied().max().unwrap_or(0);
        let mut v = vec![BigInt::zero(); top + 1];
        v[0] += constant;
        for &e in exponents {
            v[e] += 1;
        }
        Self::new(v)
    }

    /// The trinomial `−1 + X + X^n`.
    pub fn trinomial(n: usize) -> Self {
        Self::from_exponents(-1, &[1, n])
    }

    /// The `k`-th cyclotomic polynomial `Π_{d|k} (X^d − 1)^{μ(k/d)}`.
    pub fn cyclotomic(k: usize) -> Self {
        assert!(k >= 1, "cyclotomic index must be positive");
        let mut num = Self::one();
        let mut den = Self::one();
        for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
            let f = Self::monomial(1, d) - Self::one();
            match moebius(k / d) {
                1 => num = &num * &f,
                -1 => den = &den * &f,
                _ => {}
            }
        }
        num.div_exact(&den).expect("cyclotomic quotient is exact")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplication by `X^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Reciprocal polynomial `X^deg · p(1/X)`.
    pub fn reciprocal(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(v)
    }

    /// Palindromic (`p* = p`) or antipalindromic (`p* = −p`) with nonzero
    /// constant term.
    pub fn is_reciprocal(&self) -> bool {
        if self.is_zero() || self.coeffs[0].is_zero() {
            return false;
        }
        let r = self.reciprocal();
        r == *self || r == -self.clone()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides by the largest power of `X` that divides `self`.
    pub fn strip_x_powers(&self) -> Self {
        match self.valuation() {
            Some(v) => Self::new(self.coeffs[v..].to_vec()),
            None => Self::zero(),
        }
    }

    /// Euclidean division, exact over ℤ. Fails when a leading-coefficient
    /// division leaves a remainder, which cannot happen for monic divisors.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.deg();
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qq, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k + i] -= &qq * c;
            }
            q[k] = qq;
        }
        r.truncate(dd);
        Some((Self::new(q), Self::new(r)))
    }

    /// Exact quotient when `d` divides `self` in ℤ[X].
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        match self.div_rem(d) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, p: &Self) -> bool {
        p.div_exact(self).is_some()
    }

    /// Pseudo-remainder `lc(d)^k · self mod d`, with the smallest `k` needed.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.deg();
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = r.len() - dd;
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (i, c) in d.coeffs.iter().enumerate().take(dd) {
                r[k + i] -= &top * c;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Greatest common divisor in ℤ[X], primitive with positive leading
    /// coefficient (primitive remainder sequence).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = if self.deg() >= other.deg() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// `self / gcd(self, self′)`, primitive.
    pub fn squarefree_part(&self) -> Self {
        if self.deg() == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides its argument")
            .primitive_part()
    }

    /// Yun's squarefree decomposition: pairs `(factor, multiplicity)` whose
    /// product, up to the content, is `self`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.primitive_part();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        // Every divisor below is primitive and divides over ℚ, so by Gauss's
        // lemma each quotient is integral.
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = df.div_exact(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1u32;
        loop {
            let a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            if b.deg() == a.deg() {
                break;
            }
            b = b.div_exact(&a).unwrap();
            c = d.div_exact(&a).unwrap();
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| {
            acc * z + c.to_f64().unwrap_or(f64::NAN)
        })
    }

    /// Substitution `X ↦ X + a` (Taylor shift).
    pub fn taylor_shift(&self, a: &BigInt) -> Self {
        let mut v = self.coeffs.clone();
        let n = v.len();
        for i in 0..n {
            for k in (i..n.saturating_sub(1)).rev() {
                let t = &v[k + 1] * a;
                v[k] += t;
            }
        }
        Self::new(v)
    }

    /// Maximum absolute coefficient (naive height).
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    /// Comma-separated ascending coefficients, the inverse of the list form of
    /// [`FromStr`].
    pub fn to_coeff_list(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Möbius function by trial division.
pub fn moebius(mut n: usize) -> i32 {
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            r = -r;
        }
        p += 1;
    }
    if n > 1 {
        r = -r;
    }
    r
}

/// Euler's totient by trial division.
pub fn euler_phi(mut n: usize) -> usize {
    let mut r = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if n > 1 {
        r -= r / n;
    }
    r
}

/// Ascending coefficients; those outside the `i64` range as decimal strings.
impl serde::Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    /// Monomial syntax in descending degree, e.g. `x^5+x-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = a.is_one();
            match i {
                0 => write!(f, "{a}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{a}*x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Accepts either comma-separated ascending coefficients (`-1,1,0,0,0,1`)
    /// or monomial syntax (`x^5+x-1`, `3*x^2 - 2x + 7`).
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        if t.contains(',') || t.parse::<BigInt>().is_ok() {
            let coeffs = t
                .split(',')
                .map(|part| {
                    part.parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("bad coefficient {part:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(Self::new(coeffs));
        }
        parse_monomials(&t.to_ascii_lowercase())
    }
}

fn parse_monomials(t: &str) -> Result<IntPolynomial> {
    let bad = |m: &str| Error::Parse(format!("bad monomial {m:?}"));
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for ch in t.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    if !cur.is_empty() {
        terms.push(cur);
    }
    let mut acc: Vec<BigInt> = Vec::new();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, term.strip_prefix('+').unwrap_or(&term)),
        };
        if body.is_empty() {
            return Err(bad(&term));
        }
        let (coef, exp) = match body.find('x') {
            None => (body.parse::<BigInt>().map_err(|_| bad(&term))?, 0usize),
            Some(pos) => {
                let head = body[..pos].trim_end_matches('*');
                let coef = if head.is_empty() {
                    BigInt::one()
                } else {
                    head.parse::<BigInt>().map_err(|_| bad(&term))?
                };
                let tail = &body[pos + 1..];
                let exp = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| bad(&term))?
                };
                (coef, exp)
            }
        };
        if acc.len() <= exp {
            acc.resize(exp + 1, BigInt::zero());
        }
        acc[exp] += coef * sign;
    }
    Ok(IntPolynomial::new(acc))
}

impl PartialOrd for IntPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntPolynomial {
    /// Degree first, then coefficients from the top; only used for
    /// deterministic sorting.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        IntPolynomial::new(v)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn parse_both_syntaxes() {
        let a: IntPolynomial = "-1,1,0,0,0,1".parse().unwrap();
        let b: IntPolynomial = "x^5+x-1".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a, IntPolynomial::trinomial(5));
        let c: IntPolynomial = "3*x^2 - 2x + 7".parse().unwrap();
        assert_eq!(c, p(&[7, -2, 3]));
        assert_eq!(b.to_string(), "x^5+x-1");
        assert_eq!(c.to_string().parse::<IntPolynomial>().unwrap(), c);
        assert!("x^^2".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // x²−1
        let b = p(&[1, 1]); // x+1
        assert_eq!(a.div_exact(&b).unwrap(), p(&[-1, 1]));
        let g = (&a * &p(&[2, 3])).gcd(&(&a * &p(&[5, 0, 1])));
        assert_eq!(g, a);
        assert!(p(&[1, 0, 1]).div_exact(&b).is_none());
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(IntPolynomial::cyclotomic(1), p(&[-1, 1]));
        assert_eq!(IntPolynomial::cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(IntPolynomial::cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(IntPolynomial::cyclotomic(101).deg(), 100);
    }

    #[test]
    fn squarefree() {
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 0, 1]);
        assert_eq!(f.squarefree_part(), &p(&[-1, 1]) * &p(&[2, 0, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[2, 0, 1]), 1), (p(&[-1, 1]), 2)]);
    }

    #[test]
    fn reciprocity_and_shift() {
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert!(lehmer.is_reciprocal());
        assert!(!IntPolynomial::trinomial(5).is_reciprocal());
        let q = p(&[1, 2, 1]).taylor_shift(&BigInt::from(-1));
        assert_eq!(q, p(&[0, 0, 1]));
    }
}
