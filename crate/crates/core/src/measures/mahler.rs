//! Mahler measure, house, classification and the A·B·C splitting.

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algnum::{complex_roots, cyclotomic_split, roots_f64, IntPolynomial};
use super::Bounded;
use crate::error::{Error, Result};

/// Default width of the band `| |z| − 1 | ≤ tol` treated as the unit circle.
pub const UNIT_CIRCLE_TOL: f64 = 1e-9;

/// Arithmetic class of a polynomial read off its root moduli.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NumberClass {
    /// Monic, one real root `> 1`, all others strictly inside the unit disk.
    Pisot,
    /// Monic and reciprocal, one real root `> 1`, its inverse, and all other
    /// roots on the unit circle.
    Salem,
    /// Monic, a real root `> 1` strictly dominating every other modulus.
    Perron,
    Reciprocal,
    Nonreciprocal,
    /// Monic with all roots on the unit circle (a product of cyclotomics and
    /// powers of `X`).
    RootOfUnityOnly,
}

#[derive(Clone, Debug, Serialize)]
pub struct MeasureReport {
    pub poly: IntPolynomial,
    pub mahler: f64,
    /// Largest root modulus.
    pub house: f64,
    /// `Log M / deg`.
    pub weil_height: f64,
    pub class: NumberClass,
    /// Roots with multiplicity.
    #[serde(skip)]
    pub roots: Vec<Complex64>,
}

pub(crate) fn roots_with_multiplicity(p: &IntPolynomial) -> Result<Vec<Complex64>> {
    let mut out = vec![Complex64::new(0.0, 0.0); p.valuation().unwrap_or(0)];
    for (f, m) in p.squarefree_decomposition() {
        let f = f.strip_x_powers();
        if f.deg() == 0 {
            continue;
        }
        let z = roots_f64(&f)?;
        for _ in 0..m {
            out.extend_from_slice(&z);
        }
    }
    Ok(out)
}

fn classify(p: &IntPolynomial, roots: &[Complex64], tol: f64) -> NumberClass {
    let monic = p.leading().abs().is_one();
    let reciprocal = p.is_reciprocal();
    let generic = if reciprocal {
        NumberClass::Reciprocal
    } else {
        NumberClass::Nonreciprocal
    };
    if !monic || roots.is_empty() {
        return generic;
    }
    let on_circle = |z: &Complex64| (z.norm() - 1.0).abs() <= tol;
    let outside: Vec<&Complex64> = roots.iter().filter(|z| z.norm() > 1.0 + tol).collect();
    if outside.is_empty() {
        return if roots.iter().all(on_circle) && !p.coeff(0).is_zero() {
            NumberClass::RootOfUnityOnly
        } else {
            generic
        };
    }
    let top = outside
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .copied()
        .unwrap();
    let real_top = top.im.abs() <= tol * top.norm() && top.re > 1.0;
    if !real_top {
        return generic;
    }
    if outside.len() == 1 {
        let rest: Vec<&Complex64> = roots.iter().filter(|z| z.norm() <= 1.0 + tol).collect();
        if rest.iter().all(|z| z.norm() < 1.0 - tol) {
            return NumberClass::Pisot;
        }
        let inverse = rest.iter().filter(|z| (z.norm() * top.re - 1.0).abs() <= tol).count();
        let circle = rest.iter().filter(|z| on_circle(z)).count();
        if reciprocal && p.deg() >= 4 && inverse == 1 && circle + 1 == rest.len() {
            return NumberClass::Salem;
        }
    }
    let dominant = roots
        .iter()
        .filter(|&&z| (z - top).norm() > tol * top.norm())
        .all(|z| z.norm() < top.norm() - tol);
    if dominant {
        NumberClass::Perron
    } else {
        generic
    }
}

/// Mahler measure, house, Weil height and class of `p`.
pub fn mahler(p: &IntPolynomial) -> Result<MeasureReport> {
    mahler_with_tolerance(p, UNIT_CIRCLE_TOL)
}

pub fn mahler_with_tolerance(p: &IntPolynomial, tol: f64) -> Result<MeasureReport> {
    if p.is_zero() {
        return Err(Error::Precondition("Mahler measure of the zero polynomial".into()));
    }
    let roots = roots_with_multiplicity(p)?;
    let lead = p.leading().abs().to_f64().unwrap_or(f64::INFINITY);
    let log_m = lead.ln() + roots.iter().map(|z| z.norm().ln().max(0.0)).sum::<f64>();
    let house = roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let deg = p.deg().max(1) as f64;
    Ok(MeasureReport {
        poly: p.clone(),
        mahler: log_m.exp(),
        house,
        weil_height: log_m / deg,
        class: classify(p, &roots, tol),
        roots,
    })
}

/// `M(p)` with an error bound from certified root clusters at `bits` bits.
///
/// Each cluster `D(c, r)` contributes `max(0, Log |z|)` for some `z` in the
/// disk, which lies between `max(0, Log(|c| − r))` and `max(0, Log(|c| + r))`.
pub fn mahler_bounded(p: &IntPolynomial, bits: u32) -> Result<Bounded> {
    if p.is_zero() {
        return Err(Error::Precondition("Mahler measure of the zero polynomial".into()));
    }
    let lead = p.leading().abs().to_f64().unwrap_or(f64::INFINITY).ln();
    let (mut lo, mut mid, mut hi) = (lead, lead, lead);
    for (f, mult) in p.squarefree_decomposition() {
        let f = f.strip_x_powers();
        if f.deg() == 0 {
            continue;
        }
        for c in complex_roots(&f, bits)? {
            let k = f64::from(mult * c.multiplicity);
            let z = c.center().norm();
            mid += k * z.ln().max(0.0);
            hi += k * (z + c.radius).ln().max(0.0);
            if z > c.radius {
                lo += k * (z - c.radius).ln().max(0.0);
            }
        }
    }
    let value = mid.exp();
    let spread = (hi.exp() - value).max(value - lo.exp());
    Ok(Bounded {
        value,
        error: spread + 4.0 * f64::EPSILON * value * p.deg() as f64,
    })
}

/// `p = A·B·C` with `A` cyclotomic, `B` reciprocal without cyclotomic
/// factor, and `C` without reciprocal factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbcFactorization {
    pub a: IntPolynomial,
    pub b: IntPolynomial,
    pub c: IntPolynomial,
}

impl AbcFactorization {
    pub fn product(&self) -> IntPolynomial {
        &(&self.a * &self.b) * &self.c
    }
}

/// Splits `p` (with `p(0) ≠ 0`) into cyclotomic, reciprocal noncyclotomic
/// and nonreciprocal parts. The reciprocal kernel is peeled off by repeated
/// `gcd(R, R*)`; its factors come in pairs `F, F*` or are reciprocal.
pub fn abc_factorize(p: &IntPolynomial) -> Result<AbcFactorization> {
    if p.is_zero() || p.coeff(0).is_zero() {
        return Err(Error::Precondition("abc_factorize needs p(0) ≠ 0".into()));
    }
    let split = cyclotomic_split(p)?;
    let a = split.cyclotomic_part();
    let mut rest = split.rest;
    let mut b = IntPolynomial::one();
    loop {
        let g = rest.gcd(&rest.reciprocal());
        if g.deg() == 0 {
            break;
        }
        rest = rest.div_exact(&g).ok_or_else(|| {
            Error::Inconsistent(format!("gcd {g} does not divide {rest} exactly"))
        })?;
        b = &b * &g;
    }
    // The sign and content of p end up in C.
    let ab = &a * &b;
    let c = p.div_exact(&ab).ok_or_else(|| {
        Error::Inconsistent(format!("A·B = {ab} does not divide the input exactly"))
    })?;
    Ok(AbcFactorization { a, b, c })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn lehmer() -> IntPolynomial {
        poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    }

    #[test]
    fn classic_measures() {
        let r = mahler(&lehmer()).unwrap();
        assert!((r.mahler - 1.176_280_818_259_9).abs() < 1e-12);
        assert_eq!(r.class, NumberClass::Salem);
        assert!((r.mahler - r.house).abs() < 1e-12);
        let r = mahler(&poly(&[-1, -1, 0, 1])).unwrap();
        assert!((r.mahler - 1.324_717_957_244_7).abs() < 1e-12);
        assert_eq!(r.class, NumberClass::Pisot);
        let r = mahler(&poly(&[-1, -1, 1])).unwrap();
        assert!((r.mahler - 1.618_033_988_749_9).abs() < 1e-12);
        assert_eq!(r.class, NumberClass::Pisot);
        assert!((r.weil_height - r.mahler.ln() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn bounded_measure() {
        let b = mahler_bounded(&lehmer(), 212).unwrap();
        assert!((b.value - 1.176_280_818_259_917).abs() <= b.error.max(1e-15));
        assert!(b.error < 1e-12);
        let sq = &lehmer() * &lehmer();
        let b2 = mahler_bounded(&sq, 212).unwrap();
        assert!((b2.value - b.value * b.value).abs() < 1e-12);
    }

    #[test]
    fn other_classes() {
        // θ_12⁻¹ is a Perron number, neither Pisot nor Salem.
        let g12 = IntPolynomial::trinomial(12).reciprocal();
        assert_eq!(mahler(&g12).unwrap().class, NumberClass::Perron);
        let cyc = &IntPolynomial::cyclotomic(7) * &IntPolynomial::cyclotomic(12);
        let r = mahler(&cyc).unwrap();
        assert_eq!(r.class, NumberClass::RootOfUnityOnly);
        assert!((r.mahler - 1.0).abs() < 1e-12);
        assert_eq!(mahler(&poly(&[2, 0, 1])).unwrap().class, NumberClass::Nonreciprocal);
        assert_eq!(mahler(&poly(&[2, 5, 2])).unwrap().class, NumberClass::Reciprocal);
        assert!(mahler(&IntPolynomial::zero()).is_err());
    }

    #[test]
    fn abc_examples() {
        let f = abc_factorize(&IntPolynomial::trinomial(5)).unwrap();
        assert_eq!(f.a, poly(&[1, -1, 1]));
        assert_eq!(f.b, IntPolynomial::one());
        assert_eq!(f.c, poly(&[-1, 0, 1, 1]));
        assert!(!f.c.is_reciprocal());
        let g12 = IntPolynomial::trinomial(12);
        let f = abc_factorize(&g12).unwrap();
        assert_eq!((f.a.clone(), f.b.clone()), (IntPolynomial::one(), IntPolynomial::one()));
        assert_eq!(f.c, g12);
        let p = &(&lehmer() * &IntPolynomial::cyclotomic(3)) * &poly(&[-1, -1, 0, 1]);
        let f = abc_factorize(&p).unwrap();
        assert_eq!(f.product(), p);
        assert_eq!(f.a, IntPolynomial::cyclotomic(3));
        assert_eq!(f.b, lehmer());
        assert!(abc_factorize(&poly(&[0, 1, 1])).is_err());
    }

    #[test]
    fn section_with_real_root() {
        // −1 + x + x^5 + x^9.
        let s = IntPolynomial::from_exponents(-1, &[1, 5, 9]);
        let f = abc_factorize(&s).unwrap();
        assert_eq!(f.product(), s);
        assert!(f.c.deg() > 0 && !f.c.is_reciprocal());
        let mut x = (0.0f64, 1.0f64);
        for _ in 0..200 {
            let m = 0.5 * (x.0 + x.1);
            if s.eval_f64(m) < 0.0 {
                x.0 = m
            } else {
                x.1 = m
            }
        }
        assert!(f.c.eval_f64(x.0).abs() < 1e-12);
    }
}
