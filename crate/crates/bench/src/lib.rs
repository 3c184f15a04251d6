//! Benchmark fixtures shared by the criterion benches.

use lenticulus_core::algnum::largest_real_root_above_one;
use lenticulus_core::{AlgebraicNumber, IntPolynomial};

/// Lehmer's polynomial, the smallest known Mahler measure above 1.
pub fn lehmer() -> IntPolynomial {
    IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

/// The degree 8 Salem polynomial with root 1.28063...
pub fn salem8() -> IntPolynomial {
    IntPolynomial::from_i64(&[1, 0, 0, -1, -1, -1, 0, 0, 1])
}

/// The dominant root of `p`, which must exceed 1.
pub fn dominant_root(p: &IntPolynomial) -> AlgebraicNumber {
    largest_real_root_above_one(p).expect("fixture has a root above 1")
}
