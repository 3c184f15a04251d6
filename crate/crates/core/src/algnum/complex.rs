//! Complex root clusters by Aberth–Ehrlich iteration with escalating
//! precision and a-posteriori inclusion radii.
//!
//! The double-precision stage runs simultaneous Aberth iteration from
//! Newton-polygon starting points. When the requested accuracy exceeds what
//! `f64` can certify, each root is polished by Newton's method in dyadic
//! arithmetic at 106, 212, 424… bits.

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use super::dyadic::Dyadic;
use super::poly::IntPolynomial;
use crate::error::{Error, Result};

const EPS: f64 = f64::EPSILON;

/// A disk certified (a posteriori) to hold `multiplicity` roots.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexCluster {
    /// Real part of the center, as an exact binary float.
    pub re: Dyadic,
    /// Imaginary part of the center.
    pub im: Dyadic,
    pub radius: f64,
    pub multiplicity: u32,
}

impl ComplexCluster {
    pub fn center(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn contains(&self, z: Complex64) -> bool {
        (z - self.center()).norm() <= self.radius.max(4.0 * EPS * z.norm())
    }

    fn disjoint(&self, other: &Self) -> bool {
        (self.center() - other.center()).norm() > self.radius + other.radius
    }
}

/// `(p(z), p'(z), Σ|a_i||z|^i)` by Horner.
fn horner_c(c: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    let mut a = 0.0;
    let r = z.norm();
    for &ci in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + ci;
        a = a * r + ci.abs();
    }
    (p, dp, a)
}

/// Newton quotient `p(z)/p'(z)`, evaluated on the reversed polynomial when
/// `|z| > 1` to avoid overflow.
fn newton_quotient(c: &[f64], rev: &[f64], z: Complex64) -> Complex64 {
    if z.norm() <= 1.0 {
        let (p, dp, _) = horner_c(c, z);
        if dp.norm() == 0.0 {
            return p;
        }
        p / dp
    } else {
        let n = (c.len() - 1) as f64;
        let w = z.inv();
        let (q, dq, _) = horner_c(rev, w);
        // p'/p = w·(n − w q'(w)/q(w))
        let t = w * (Complex64::new(n, 0.0) - w * dq / q);
        if t.norm() == 0.0 {
            return Complex64::new(f64::INFINITY, 0.0);
        }
        t.inv()
    }
}

/// Starting points on circles whose radii come from the upper convex hull of
/// `(i, log|a_i|)`.
fn initial_points(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let pts: Vec<(usize, f64)> = c
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != 0.0)
        .map(|(i, v)| (i, v.abs().ln()))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 as f64 - a.0 as f64) * (p.1 - a.1) - (b.1 - a.1) * (p.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut out = Vec::with_capacity(n);
    let sigma = 0.7;
    for w in hull.windows(2) {
        let (i, li) = w[0];
        let (k, lk) = w[1];
        let m = k - i;
        let r = ((li - lk) / m as f64).exp();
        for t in 0..m {
            let ang = 2.0 * std::f64::consts::PI * (t as f64 / m as f64) + 2.0 * std::f64::consts::PI * i as f64 / n as f64 + sigma;
            out.push(Complex64::from_polar(r, ang));
        }
    }
    out
}

/// `|p(z)|` is within the rounding error of its Horner evaluation, so
/// further Newton corrections are noise.
fn at_noise_level(c: &[f64], rev: &[f64], z: Complex64) -> bool {
    let n = (c.len() - 1) as f64;
    let (p, _, a) = if z.norm() <= 1.0 { horner_c(c, z) } else { horner_c(rev, z.inv()) };
    p.norm() <= 2.0 * (n + 1.0) * EPS * a
}

/// Aberth–Ehrlich iteration in double precision on a squarefree polynomial
/// with nonzero constant term. Returns approximations and a convergence flag.
pub fn aberth_f64(c: &[f64], max_iter: usize) -> (Vec<Complex64>, bool) {
    let n = c.len() - 1;
    if n == 0 {
        return (Vec::new(), true);
    }
    if n == 1 {
        return (vec![Complex64::new(-c[0] / c[1], 0.0)], true);
    }
    let rev: Vec<f64> = c.iter().rev().copied().collect();
    let mut z = initial_points(c);
    let mut done = vec![false; n];
    for _ in 0..max_iter {
        let mut all = true;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let q = newton_quotient(c, &rev, z[i]);
            let mut s = Complex64::zero();
            for j in 0..n {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let w = q / (Complex64::new(1.0, 0.0) - q * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                let bump = Complex64::new(1e-3, 1e-3) * z[i].norm().max(1e-3);
                z[i] += bump;
                all = false;
                continue;
            }
            z[i] -= w;
            if w.norm() <= 2.0 * EPS * z[i].norm() || at_noise_level(c, &rev, z[i]) {
                done[i] = true;
            } else {
                all = false;
            }
        }
        if all {
            return (z, true);
        }
    }
    let ok = done.iter().all(|&d| d);
    (z, ok)
}

/// Inclusion radius `deg·|p(z)|/|p'(z)|` inflated by a rounding-error bound
/// on the hardware-float evaluation.
fn f64_radius(c: &[f64], z: Complex64) -> f64 {
    let n = (c.len() - 1) as f64;
    let (p, dp, a) = horner_c(c, z);
    let err = 2.0 * (n + 1.0) * EPS * a;
    let da: f64 = {
        let r = z.norm();
        let mut acc = 0.0;
        for (i, ci) in c.iter().enumerate().rev() {
            if i > 0 {
                acc = acc * r + ci.abs() * i as f64;
            }
        }
        acc
    };
    let dden = dp.norm() - 2.0 * (n + 1.0) * EPS * da;
    if dden <= 0.0 {
        return f64::INFINITY;
    }
    n * (p.norm() + err) / dden
}

/// Complex number with dyadic parts, rounded to `prec` bits per operation.
#[derive(Clone, Debug)]
struct DComplex {
    re: Dyadic,
    im: Dyadic,
}

impl DComplex {
    fn from_c64(z: Complex64) -> Self {
        DComplex {
            re: Dyadic::from_f64(z.re).unwrap_or_default(),
            im: Dyadic::from_f64(z.im).unwrap_or_default(),
        }
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
    fn add(&self, o: &Self) -> Self {
        DComplex {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        DComplex {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul(&self, o: &Self, prec: u32) -> Self {
        let re = &(&self.re * &o.re) - &(&self.im * &o.im);
        let im = &(&self.re * &o.im) + &(&self.im * &o.re);
        DComplex {
            re: re.round(prec, false),
            im: im.round(prec, false),
        }
    }
    fn norm2(&self, prec: u32) -> Dyadic {
        (&(&self.re * &self.re) + &(&self.im * &self.im)).round(prec, false)
    }
    fn div(&self, o: &Self, prec: u32) -> Self {
        let d = o.norm2(prec);
        let conj = DComplex {
            re: o.re.clone(),
            im: -&o.im,
        };
        let num = self.mul(&conj, prec);
        DComplex {
            re: num.re.div(&d, prec),
            im: num.im.div(&d, prec),
        }
    }
    fn add_int(&self, k: &num_bigint::BigInt) -> Self {
        DComplex {
            re: &self.re + &Dyadic::from_int(k.clone()),
            im: self.im.clone(),
        }
    }
    fn abs_f64(&self) -> f64 {
        self.to_c64().norm()
    }
}

fn horner_d(p: &IntPolynomial, z: &DComplex, prec: u32) -> (DComplex, DComplex) {
    let zero = DComplex {
        re: Dyadic::zero(),
        im: Dyadic::zero(),
    };
    let mut v = zero.clone();
    let mut dv = zero;
    for c in p.coeffs().iter().rev() {
        dv = dv.mul(z, prec).add(&v);
        v = v.mul(z, prec).add_int(c);
    }
    (v, dv)
}

/// Newton polishing at `prec` bits. Returns the polished center and an
/// inclusion radius computed at that precision.
fn polish(p: &IntPolynomial, z0: Complex64, prec: u32) -> (DComplex, f64) {
    let n = p.deg() as f64;
    let mut z = DComplex::from_c64(z0);
    let tol = 2f64.powi(-(prec as i32) + 4);
    for _ in 0..64 {
        let (v, dv) = horner_d(p, &z, prec);
        if dv.re.is_zero() && dv.im.is_zero() {
            break;
        }
        let step = v.div(&dv, prec);
        z = z.sub(&step);
        if step.abs_f64() <= tol * z.abs_f64().max(1e-300) {
            break;
        }
    }
    let (v, dv) = horner_d(p, &z, prec);
    let scale: f64 = {
        let r = z.abs_f64();
        p.coeffs()
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.abs().to_f64().unwrap_or(f64::MAX))
    };
    let err = 4.0 * (n + 1.0) * 2f64.powi(-(prec as i32)) * scale;
    let dvn = dv.abs_f64();
    let r = if dvn > err {
        n * (v.abs_f64() + err) / (dvn - err)
    } else {
        f64::INFINITY
    };
    (
        DComplex {
            re: z.re.round(prec, false),
            im: z.im.round(prec, false),
        },
        r,
    )
}

/// Roots of a squarefree polynomial with nonzero constant term.
fn squarefree_roots(p: &IntPolynomial, bits: u32, mult: u32) -> Result<Vec<ComplexCluster>> {
    let c = p.to_f64_coeffs();
    if c.iter().any(|v| !v.is_finite()) {
        return Err(Error::Precondition(
            "coefficients exceed the double-precision range".into(),
        ));
    }
    let (approx, converged) = aberth_f64(&c, 2000);
    let target = |z: Complex64| 2f64.powf(-(bits as f64) / 2.0) * z.norm().max(1.0);
    let mut clusters: Vec<ComplexCluster> = Vec::with_capacity(approx.len());
    let need_mp = bits > 53 || !converged;
    for &z in &approx {
        let r = f64_radius(&c, z);
        if !need_mp && r <= target(z) {
            clusters.push(ComplexCluster {
                re: Dyadic::from_f64(z.re).unwrap_or_default(),
                im: Dyadic::from_f64(z.im).unwrap_or_default(),
                radius: r,
                multiplicity: mult,
            });
            continue;
        }
        let mut prec = 106u32.max(bits + 32);
        loop {
            let (w, r) = polish(p, z, prec);
            if r <= target(w.to_c64()) {
                clusters.push(ComplexCluster {
                    re: w.re,
                    im: w.im,
                    radius: r,
                    multiplicity: mult,
                });
                break;
            }
            if prec >= 4 * bits.max(212) {
                return Err(Error::NoConvergence(format!(
                    "root near {z} of degree-{} polynomial: radius {r:e} after {prec} bits",
                    p.deg()
                )));
            }
            prec *= 2;
        }
    }
    Ok(clusters)
}

/// All complex roots of `p` with multiplicities, as disjoint clusters sorted
/// by argument in `(−π, π]` and then by modulus.
pub fn complex_roots(p: &IntPolynomial, bits: u32) -> Result<Vec<ComplexCluster>> {
    if p.deg() == 0 {
        return Err(Error::Precondition(
            "complex_roots needs a polynomial of degree at least 1".into(),
        ));
    }
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        let v = factor.valuation().unwrap_or(0);
        if v > 0 {
            out.push(ComplexCluster {
                re: Dyadic::zero(),
                im: Dyadic::zero(),
                radius: 0.0,
                multiplicity: mult,
            });
        }
        let f = factor.strip_x_powers();
        if f.deg() > 0 {
            out.extend(squarefree_roots(&f, bits, mult)?);
        }
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            if !out[i].disjoint(&out[j]) {
                return Err(Error::Certification(format!(
                    "inclusion disks around {} and {} overlap",
                    out[i].center(),
                    out[j].center()
                )));
            }
        }
    }
    out.sort_by(|a, b| {
        let (za, zb) = (a.center(), b.center());
        za.arg()
            .partial_cmp(&zb.arg())
            .unwrap()
            .then(za.norm().partial_cmp(&zb.norm()).unwrap())
    });
    Ok(out)
}

/// Double-precision roots without clustering, for hot loops that only need
/// approximate values of a squarefree polynomial.
pub fn roots_f64(p: &IntPolynomial) -> Result<Vec<Complex64>> {
    let f = p.strip_x_powers();
    let mut zeros = vec![Complex64::zero(); p.valuation().unwrap_or(0)];
    let c = f.to_f64_coeffs();
    let (z, ok) = aberth_f64(&c, 2000);
    if !ok {
        return Err(Error::NoConvergence(format!(
            "Aberth iteration on degree {}",
            f.deg()
        )));
    }
    zeros.extend(z);
    Ok(zeros)
}

/// Mahler measure `|a_d| Π max(1, |α|)` from double-precision roots of the
/// squarefree decomposition (multiplicities restored). Relative accuracy is
/// about `deg · 1e−15` for well-separated roots.
pub fn mahler_measure(p: &IntPolynomial) -> Result<f64> {
    if p.is_zero() {
        return Err(Error::Precondition("Mahler measure of the zero polynomial".into()));
    }
    let mut log_m = p.leading().abs().to_f64().unwrap_or(f64::INFINITY).ln();
    for (factor, mult) in p.squarefree_decomposition() {
        let f = factor.strip_x_powers();
        if f.deg() == 0 {
            continue;
        }
        for z in roots_f64(&f)? {
            log_m += mult as f64 * z.norm().ln().max(0.0);
        }
    }
    Ok(log_m.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plus_minus_i() {
        let r = complex_roots(&IntPolynomial::from_i64(&[1, 0, 1]), 53).unwrap();
        assert_eq!(r.len(), 2);
        for c in &r {
            assert!((c.center().norm() - 1.0).abs() < 1e-15);
            assert!(c.center().re.abs() < 1e-15);
            assert!(c.radius < 1e-12);
        }
    }

    #[test]
    fn multiplicities_and_zero() {
        // x²(x−1)³(x²+x+1)
        let p = &(&IntPolynomial::from_i64(&[0, 0, 1]) * &IntPolynomial::from_i64(&[-1, 3, -3, 1]))
            * &IntPolynomial::from_i64(&[1, 1, 1]);
        let r = complex_roots(&p, 53).unwrap();
        let total: u32 = r.iter().map(|c| c.multiplicity).sum();
        assert_eq!(total, 7);
        assert!(r.iter().any(|c| c.multiplicity == 3 && (c.center().re - 1.0).abs() < 1e-12));
        assert!(r.iter().any(|c| c.multiplicity == 2 && c.center().norm() == 0.0));
    }

    #[test]
    fn high_precision_escalation() {
        let p = IntPolynomial::trinomial(12);
        let r = complex_roots(&p, 212).unwrap();
        assert_eq!(r.len(), 12);
        for c in &r {
            assert!(c.radius < 2f64.powi(-100));
        }
    }

    #[test]
    fn large_trinomial_converges() {
        let z = roots_f64(&IntPolynomial::trinomial(1000)).unwrap();
        assert_eq!(z.len(), 1000);
        let worst = z
            .iter()
            .map(|&w| (w.powu(1000) + w - 1.0).norm())
            .fold(0.0, f64::max);
        assert!(worst < 1e-11, "{worst}");
    }
}
