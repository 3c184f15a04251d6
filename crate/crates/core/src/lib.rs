//! Rényi–Parry β-shifts, trinomial root asymptotics, Rouché-certified
//! lenticular zeros and lenticular Mahler-measure minorants.
//!
//! The crate is organised bottom-up:
//!
//! | module | contents |
//! |--------|----------|
//! | [`algnum`] | integer polynomials, real algebraic numbers, ℤ[X]/(P), complex root clusters |
//! | [`betashift`] | greedy β-expansions, admissibility, dynamical degree, Parry polynomials |
//! | [`trinomial`] | roots of `−1 + z + z^n`, their asymptotic expansions, `M(G_n)` |
//! | [`rouche`] | κ, `a_max`, Rouché disks, `J_n`, `H_n`, lenticuli of Parry Upper functions |
//! | [`measures`] | Mahler measures, cyclotomic splitting, limit constants, minorants |
//! | [`rewrite`] | the `U_β` recurrence, rewriting trails, Taylor coefficients at `1/β` |
//! | [`equidist`] | angular discrepancy of root sets |
//!
//! ```
//! use lenticulus_core::algnum::largest_real_root_above_one;
//! use lenticulus_core::betashift::{dynamical_degree, parry_polynomial, renyi_expansion};
//! use lenticulus_core::IntPolynomial;
//!
//! let lehmer = IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
//! let beta = largest_real_root_above_one(&lehmer).unwrap();
//! let expansion = renyi_expansion(&beta, 10_000).unwrap();
//! assert_eq!(parry_polynomial(&expansion).unwrap().degree(), 75);
//! assert_eq!(dynamical_degree(&beta).unwrap(), 12);
//! ```

// `!(x > 0.0)` style guards reject NaN along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algnum;
pub mod betashift;
pub mod equidist;
pub mod error;
pub mod measures;
pub mod rewrite;
pub mod rouche;
pub mod trinomial;

pub use algnum::{
    AlgebraicNumber, ComplexCluster, Dyadic, IntPolynomial, RatInterval, RingElement,
};

pub use betashift::{BetaExpansion, DigitWord, ExpansionStatus, ParryCase, ParryPolynomial};
pub use equidist::{AngularProfile, Discrepancy};
pub use error::{Error, Result};
pub use measures::{Bounded, Constants, MeasureReport, NumberClass};
pub use rouche::{LenticularZero, Lenticulus, ParryUpper, RoucheDisk};
pub use trinomial::{AsymptoticValue, TrinomialRootSet};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 212;
