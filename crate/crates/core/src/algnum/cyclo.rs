//! Cyclotomic factors of integer polynomials.
//!
//! Low degrees are scanned exhaustively over every `Φ_k` with `φ(k) ≤ deg`.
//! Higher degrees take their candidates `k` from the roots lying on the unit
//! circle (continued-fraction denominators of `arg/2π`); every factor reported
//! is confirmed by exact division.

use std::collections::BTreeSet;

use num_complex::Complex64;

use super::complex::roots_f64;
use super::poly::{euler_phi, IntPolynomial};
use crate::error::Result;

/// Degree up to which every admissible `Φ_k` is tried.
const EXHAUSTIVE_DEGREE: usize = 40;

/// `p = Π Φ_k^{e_k} · rest` with `rest` free of cyclotomic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicSplit {
    /// `(k, e_k)` sorted by `k`.
    pub factors: Vec<(usize, u32)>,
    pub rest: IntPolynomial,
}

impl CyclotomicSplit {
    /// The cyclotomic part `Π Φ_k^{e_k}`.
    pub fn cyclotomic_part(&self) -> IntPolynomial {
        let mut a = IntPolynomial::one();
        for &(k, e) in &self.factors {
            let phi = IntPolynomial::cyclotomic(k);
            for _ in 0..e {
                a = &a * &phi;
            }
        }
        a
    }
}

/// Splits off every cyclotomic factor of `p` (which must be nonzero).
pub fn cyclotomic_split(p: &IntPolynomial) -> Result<CyclotomicSplit> {
    let mut rest = p.clone();
    let mut factors = Vec::new();
    for k in candidates(p)? {
        let phi = IntPolynomial::cyclotomic(k);
        let mut e = 0;
        while rest.deg() >= phi.deg() {
            match rest.div_exact(&phi) {
                Some(q) => {
                    rest = q;
                    e += 1;
                }
                None => break,
            }
        }
        if e > 0 {
            factors.push((k, e));
        }
    }
    Ok(CyclotomicSplit { factors, rest })
}

fn candidates(p: &IntPolynomial) -> Result<BTreeSet<usize>> {
    let core = p.strip_x_powers().squarefree_part();
    let d = core.deg();
    let mut out = BTreeSet::new();
    if d == 0 {
        return Ok(out);
    }
    if d <= EXHAUSTIVE_DEGREE {
        for k in 1..=2 * d * d + 2 {
            if euler_phi(k) <= d {
                out.insert(k);
            }
        }
        return Ok(out);
    }
    for z in roots_f64(&core)? {
        if (z.norm() - 1.0).abs() > 1e-6 {
            continue;
        }
        if let Some(k) = root_of_unity_order(z, d) {
            out.insert(k);
        }
    }
    Ok(out)
}

/// Smallest `k` with `φ(k) ≤ max_phi` such that `z` is numerically a
/// primitive `k`-th root of unity.
fn root_of_unity_order(z: Complex64, max_phi: usize) -> Option<usize> {
    let x = (z.arg() / std::f64::consts::TAU).rem_euclid(1.0);
    if !(1e-9..=1.0 - 1e-9).contains(&x) {
        return Some(1);
    }
    // Convergents h/k of the continued fraction of x.
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        let ai = a as i64;
        let (h2, k2) = (ai * h1 + h0, ai * k1 + k0);
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if k1 > 0 {
            let k = k1 as usize;
            if euler_phi(k) > max_phi || k > 1 << 24 {
                return None;
            }
            if (x - h1 as f64 / k1 as f64).abs() < 1e-8 {
                return Some(k);
            }
        }
        let frac = y - a;
        if frac < 1e-12 {
            return None;
        }
        y = 1.0 / frac;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trinomial_five_mod_six() {
        let s = cyclotomic_split(&IntPolynomial::trinomial(5)).unwrap();
        assert_eq!(s.factors, vec![(6, 1)]);
        assert_eq!(s.rest, IntPolynomial::from_i64(&[-1, 0, 1, 1]));
        let s = cyclotomic_split(&IntPolynomial::trinomial(59)).unwrap();
        assert_eq!(s.factors, vec![(6, 1)]);
        let s = cyclotomic_split(&IntPolynomial::trinomial(60)).unwrap();
        assert!(s.factors.is_empty());
    }

    #[test]
    fn products_of_cyclotomics() {
        let p = &(&IntPolynomial::cyclotomic(7) * &IntPolynomial::cyclotomic(1))
            * &(&IntPolynomial::cyclotomic(12) * &IntPolynomial::cyclotomic(12));
        let s = cyclotomic_split(&p).unwrap();
        assert_eq!(s.factors, vec![(1, 1), (7, 1), (12, 2)]);
        assert_eq!(s.rest, IntPolynomial::one());
        assert_eq!(s.cyclotomic_part(), p);
    }

    #[test]
    fn high_degree_numeric_candidates() {
        // Φ_105 has degree 48 and a coefficient −2.
        let phi = IntPolynomial::cyclotomic(105);
        assert_eq!(phi.deg(), 48);
        let p = &phi * &IntPolynomial::trinomial(10);
        let s = cyclotomic_split(&p).unwrap();
        assert_eq!(s.factors, vec![(105, 1)]);
        assert_eq!(s.rest, IntPolynomial::trinomial(10));
    }
}
