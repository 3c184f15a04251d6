//! The trinomials `G_n(z) = −1 + z + z^n`.
//!
//! `G_n` has a unique root `θ_n` in `(0, 1)`; the other roots `z_{j,n}` and
//! their conjugates are indexed by increasing argument in the upper half
//! plane, with the negative real root last when `n` is even. Exactly the
//! `1 + 2⌊n/6⌋` roots of the sector `|arg z| < π/3` lie inside the unit disk.

mod asymptotic;
mod sector;

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;

pub use asymptotic::{
    arg_expansion, lambda_n, lambda_n_defined, modulus_expansion, theta_n_expansion,
    theta_step_bound, zjn_expansion, AsymptoticValue, ModulusForm, RegimeValue, ZjnExpansion,
    ZjnRegime,
};
pub use sector::SectorPlan;
pub(crate) use asymptotic::Logs;

use crate::algnum::{complex_roots, AlgebraicNumber, ComplexCluster, Dyadic, IntPolynomial};
use crate::error::{Error, Result};
use crate::measures::lambda_constant;

/// Growth factor in the Zhang–Zagier type bound.
pub const ETA: f64 = 1.281_777_021_4;

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Precondition(format!("G_n needs n ≥ 2, got {n}")));
    }
    Ok(())
}

fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Whether `X² − X + 1` divides `G_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TrinomialStructure {
    Irreducible,
    /// `G_n = (X² − X + 1)·quotient`, the quotient being irreducible.
    CyclotomicFactorX2mX1 { quotient: IntPolynomial },
}

/// The factorization pattern of `G_n`, decided by exact division.
pub fn irreducible_structure(n: usize) -> Result<TrinomialStructure> {
    check_n(n)?;
    let phi6 = IntPolynomial::from_i64(&[1, -1, 1]);
    Ok(match IntPolynomial::trinomial(n).div_exact(&phi6) {
        Some(quotient) => TrinomialStructure::CyclotomicFactorX2mX1 { quotient },
        None => TrinomialStructure::Irreducible,
    })
}

/// The minimal polynomial of `θ_n` (and, reversed, of `θ_n⁻¹`).
pub fn theta_minpoly(n: usize) -> Result<IntPolynomial> {
    Ok(match irreducible_structure(n)? {
        TrinomialStructure::Irreducible => IntPolynomial::trinomial(n),
        TrinomialStructure::CyclotomicFactorX2mX1 { quotient } => quotient,
    })
}

/// `θ_n`, the root of `G_n` in `(0, 1)`.
///
/// `G_n` increases strictly on `(0, 1)` from −1 to 1, so the isolator
/// `(0, 1)` is valid without a root count.
pub fn theta_n(n: usize) -> Result<AlgebraicNumber> {
    let p = theta_minpoly(n)?;
    AlgebraicNumber::new(&p, rat(0), rat(1))
}

/// `θ_n⁻¹ ∈ (1, 2)`, the root of `X^n − X^{n−1} − 1`.
pub fn theta_n_inverse(n: usize) -> Result<AlgebraicNumber> {
    let mut p = theta_minpoly(n)?.reciprocal();
    if p.leading() < BigInt::from(0) {
        p = -p;
    }
    AlgebraicNumber::new(&p, rat(1), rat(2))
}

/// `θ_n` in double precision by Newton's method from the development.
pub fn theta_n_f64(n: usize) -> f64 {
    let nf = n as f64;
    let mut x = if n >= 6 {
        let l = nf.ln();
        1.0 - (l - l.ln()) / nf
    } else {
        0.6
    };
    for _ in 0..100 {
        let xn1 = x.powi(n as i32 - 1);
        let step = (x * xn1 + x - 1.0) / (1.0 + nf * xn1);
        x -= step;
        if step.abs() < 1e-17 {
            break;
        }
    }
    x
}

/// All roots of `G_n` with certified inclusion disks.
#[derive(Clone, Debug)]
pub struct TrinomialRootSet {
    pub n: usize,
    pub theta: AlgebraicNumber,
    /// `z_{j,n}` for `j = 1..=⌊(n−1)/2⌋`, then the negative real root if `n`
    /// is even; arguments strictly increasing.
    pub upper_roots: Vec<ComplexCluster>,
    pub structure: TrinomialStructure,
}

impl TrinomialRootSet {
    /// Number of roots `z_{j,n}` in the open upper half plane.
    pub fn upper_count(&self) -> usize {
        (self.n - 1) / 2
    }

    /// `z_{j,n}` for `1 ≤ j ≤ ⌊(n−1)/2⌋`.
    pub fn z(&self, j: usize) -> Result<Complex64> {
        if j == 0 || j > self.upper_count() {
            return Err(Error::OutOfRange(format!(
                "root index j = {j} outside 1..={}",
                self.upper_count()
            )));
        }
        Ok(self.upper_roots[j - 1].center())
    }

    pub fn cluster(&self, j: usize) -> Result<&ComplexCluster> {
        self.z(j)?;
        Ok(&self.upper_roots[j - 1])
    }

    pub fn negative_root(&self) -> Option<Complex64> {
        self.n.is_multiple_of(2).then(|| self.upper_roots.last().unwrap().center())
    }

    pub fn theta_f64(&self) -> f64 {
        self.theta.to_f64()
    }

    /// The root `e^{iπ/3}` present when `n ≡ 5 (mod 6)`.
    fn sixth_root_index(&self) -> Option<usize> {
        if !matches!(self.structure, TrinomialStructure::CyclotomicFactorX2mX1 { .. }) {
            return None;
        }
        let w = Complex64::from_polar(1.0, PI / 3.0);
        (1..=self.upper_count()).find(|&j| self.upper_roots[j - 1].contains(w))
    }

    /// Roots (with conjugates and `θ_n`) in the open sector `|arg z| < π/3`.
    pub fn lenticular_count(&self) -> usize {
        let skip = self.sixth_root_index();
        let k = (1..=self.upper_count())
            .filter(|&j| Some(j) != skip && self.upper_roots[j - 1].center().arg() < PI / 3.0)
            .count();
        1 + 2 * k
    }

    /// Roots (with conjugates and `θ_n`) strictly inside the unit disk.
    pub fn inside_unit_disk(&self) -> usize {
        let skip = self.sixth_root_index();
        let k = (1..=self.upper_count())
            .filter(|&j| Some(j) != skip && self.upper_roots[j - 1].center().norm() < 1.0)
            .count();
        1 + 2 * k
    }

    /// Every root, conjugates included, as double-precision values.
    pub fn all_roots(&self) -> Vec<Complex64> {
        let mut v = vec![Complex64::new(self.theta_f64(), 0.0)];
        for j in 1..=self.upper_count() {
            let z = self.upper_roots[j - 1].center();
            v.push(z);
            v.push(z.conj());
        }
        if let Some(z) = self.negative_root() {
            v.push(z);
        }
        v
    }
}

/// All roots of `G_n` at `bits` bits of precision.
///
/// Verifies that the arguments increase strictly and that every modulus lies
/// in `[1 − 2 Log n/n, 1 + 2 Log 2/n]`.
pub fn roots(n: usize, bits: u32) -> Result<TrinomialRootSet> {
    check_n(n)?;
    let structure = irreducible_structure(n)?;
    let theta = theta_n(n)?;
    let clusters = complex_roots(&IntPolynomial::trinomial(n), bits)?;
    let mut upper = Vec::new();
    let mut negative = None;
    let mut positive = 0;
    for c in clusters {
        let z = c.center();
        if z.im.abs() <= c.radius {
            if z.re < 0.0 {
                negative = Some(ComplexCluster {
                    im: Dyadic::zero(),
                    ..c
                });
            } else {
                positive += 1;
            }
        } else if z.im > 0.0 {
            upper.push(c);
        }
    }
    let want_negative = n.is_multiple_of(2);
    if positive != 1 || negative.is_some() != want_negative || upper.len() != (n - 1) / 2 {
        return Err(Error::Certification(format!(
            "root clusters of G_{n} do not match the expected real/complex split"
        )));
    }
    upper.sort_by(|a, b| a.center().arg().total_cmp(&b.center().arg()));
    upper.extend(negative);
    for w in upper.windows(2) {
        if w[0].center().arg() >= w[1].center().arg() {
            return Err(Error::Certification(format!(
                "arguments of the roots of G_{n} are not strictly increasing"
            )));
        }
    }
    let nf = n as f64;
    let (lo, hi) = (1.0 - 2.0 * nf.ln() / nf, 1.0 + 2.0 * 2f64.ln() / nf);
    let t = theta.to_f64();
    let moduli = upper.iter().map(|c| c.center().norm()).chain(std::iter::once(t));
    for r in moduli {
        if !(lo..=hi).contains(&r) {
            return Err(Error::Certification(format!(
                "a root of G_{n} has modulus {r} outside [{lo}, {hi}]"
            )));
        }
    }
    Ok(TrinomialRootSet {
        n,
        theta,
        upper_roots: upper,
        structure,
    })
}

/// `M(G_n)` from the roots, and its approximant built from developments.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GnMeasure {
    pub n: usize,
    /// `θ_n⁻¹ Π_{j ≤ ⌊n/6⌋} |z_{j,n}|⁻²`.
    pub exact: f64,
    /// `D(θ_n)⁻¹ Π D(|z_{j,n}|)⁻²` over roots inside the unit disk with
    /// `arg z > 2π Log n/n`; `NaN` for `n < 6`.
    pub approximant: f64,
}

/// `M(G_n)` from an already computed root set.
pub fn mahler_gn_from(rs: &TrinomialRootSet) -> GnMeasure {
    let n = rs.n;
    let mut log_m = -rs.theta_f64().ln();
    for j in 1..=n / 6 {
        log_m -= 2.0 * rs.upper_roots[j - 1].center().norm().ln();
    }
    let approximant = if n >= 6 {
        let nf = n as f64;
        let l = nf.ln();
        let mut a = -theta_n_expansion(n).map(|e| e.development).unwrap_or(f64::NAN).ln();
        for j in 1..=n / 6 {
            if j as f64 > l {
                let d = 1.0 + (2.0 * (PI * j as f64 / nf).sin()).ln() / nf;
                a -= 2.0 * d.ln();
            }
        }
        a.exp()
    } else {
        f64::NAN
    };
    GnMeasure {
        n,
        exact: log_m.exp(),
        approximant,
    }
}

/// `M(G_n)`, exact (from numeric roots) and approximant.
pub fn mahler_gn(n: usize) -> Result<GnMeasure> {
    Ok(mahler_gn_from(&roots(n, 53)?))
}

/// `η^{n+u}/Λ · (1 − 1/(6 Log n))` with `u = −2` iff `n ≡ 5 (mod 6)`.
pub fn zhang_zagier_bound(n: usize) -> Result<f64> {
    check_n(n)?;
    let u: i32 = if n % 6 == 5 { -2 } else { 0 };
    let e = n as i32 + u;
    Ok(ETA.powi(e) / lambda_constant() * (1.0 - 1.0 / (6.0 * (n as f64).ln())))
}

/// The minimal polynomial of `θ_n⁻¹ − 1`.
pub fn theta_inverse_minus_one_minpoly(n: usize) -> Result<IntPolynomial> {
    let p = theta_n_inverse(n)?.minpoly().clone();
    Ok(p.taylor_shift(&BigInt::from(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::mahler_measure;

    /// Plain bisection on `x + x^n − 1` in double precision.
    fn bisect_theta(n: usize) -> f64 {
        let (mut a, mut b) = (0.0f64, 1.0f64);
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if m + m.powi(n as i32) - 1.0 < 0.0 {
                a = m;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    }

    #[test]
    fn theta_values() {
        let inv = |n| 1.0 / theta_n(n).unwrap().to_f64();
        assert!((inv(2) - 1.618034).abs() < 1e-6);
        assert!((inv(5) - 1.324718).abs() < 1e-6);
        assert!((inv(31) - 1.08544).abs() < 1e-4);
        assert!((inv(259) - 1.016126).abs() < 1e-5);
        for n in [2usize, 7, 100, 1000] {
            assert!((theta_n_f64(n) - bisect_theta(n)).abs() < 1e-14);
            assert!((theta_n_inverse(n).unwrap().to_f64() * bisect_theta(n) - 1.0).abs() < 1e-14);
        }
        let mut prev = 0.0;
        for n in 2..60 {
            let t = theta_n_f64(n);
            assert!(t > prev);
            prev = t;
        }
    }

    #[test]
    fn structure() {
        match irreducible_structure(5).unwrap() {
            TrinomialStructure::CyclotomicFactorX2mX1 { quotient } => {
                // X³ − X − 1 = −G_5*/(X² − X + 1), i.e. the quotient is X³ + X² − 1.
                assert_eq!(quotient, IntPolynomial::from_i64(&[-1, 0, 1, 1]));
                let pisot = IntPolynomial::from_i64(&[-1, -1, 0, 1]);
                assert_eq!(-quotient.reciprocal(), pisot);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            irreducible_structure(11).unwrap(),
            TrinomialStructure::CyclotomicFactorX2mX1 { .. }
        ));
        assert_eq!(irreducible_structure(12).unwrap(), TrinomialStructure::Irreducible);
        for n in 2..80 {
            let has = !matches!(irreducible_structure(n).unwrap(), TrinomialStructure::Irreducible);
            assert_eq!(has, n % 6 == 5, "n = {n}");
        }
    }

    #[test]
    fn root_sets() {
        for n in 2..=60 {
            let rs = roots(n, 53).unwrap();
            assert_eq!(rs.lenticular_count(), 1 + 2 * (n / 6), "n = {n}");
            assert_eq!(rs.inside_unit_disk(), 1 + 2 * (n / 6), "n = {n}");
            assert_eq!(rs.all_roots().len(), n);
            for j in 1..=rs.upper_count() {
                let z = rs.z(j).unwrap();
                if rs.sixth_root_index() == Some(j) {
                    assert!((z.norm() - 1.0).abs() < 1e-14 && (z.re - 0.5).abs() < 1e-14);
                } else {
                    assert_eq!(z.norm() < 1.0, j <= n / 6, "n = {n}, j = {j}");
                    assert_eq!(z.re > 0.5, j <= n / 6, "n = {n}, j = {j}");
                }
            }
            if n >= 6 {
                for j in 1..n / 6 {
                    assert!(rs.z(j).unwrap().norm() < rs.z(j + 1).unwrap().norm());
                }
            }
        }
        for n in [71usize, 260] {
            assert_eq!(roots(n, 53).unwrap().lenticular_count(), 1 + 2 * (n / 6));
        }
        let rs = roots(6, 53).unwrap();
        assert!(rs.z(1).unwrap().norm() > rs.theta_f64());
        assert!(roots(1, 53).is_err());
    }

    #[test]
    fn measures_of_gn() {
        let m2 = mahler_gn(2).unwrap().exact;
        assert!((m2 - 1.618_033_988_749_895).abs() < 1e-12);
        let m5 = mahler_gn(5).unwrap().exact;
        assert!((m5 - 1.324_717_957_244_746).abs() < 1e-12);
        for n in 3..=100 {
            let rs = roots(n, 53).unwrap();
            let m = mahler_gn_from(&rs);
            // Reciprocity M(G_n) = M(G_n*), through the generic routine.
            let star = mahler_measure(&IntPolynomial::trinomial(n).reciprocal()).unwrap();
            assert!((m.exact - star).abs() < 1e-10, "n = {n}");
            if n != 5 {
                assert!(m.exact > m5, "n = {n}");
            }
        }
    }

    #[test]
    fn zhang_zagier() {
        let b6 = zhang_zagier_bound(6).unwrap();
        let want = ETA.powi(6) / lambda_constant() * (1.0 - 1.0 / (6.0 * 6f64.ln()));
        assert!((b6 - want).abs() < 1e-12);
        let b5 = zhang_zagier_bound(5).unwrap();
        assert!((b5 - ETA.powi(3) / lambda_constant() * (1.0 - 1.0 / (6.0 * 5f64.ln()))).abs() < 1e-12);
        for n in 2..=20 {
            let q = theta_inverse_minus_one_minpoly(n).unwrap();
            let m = mahler_measure(&q).unwrap();
            assert!(m >= zhang_zagier_bound(n).unwrap(), "n = {n}: {m}");
        }
    }

    #[test]
    fn theta_increments() {
        for n in 20..=400 {
            let d = theta_n_f64(n) - theta_n_f64(n - 1);
            assert!(d > 0.0 && d <= theta_step_bound(n), "n = {n}");
        }
    }
}
