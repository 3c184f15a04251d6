//! Certified real and complex arithmetic over integer polynomials.
//!
//! * [`IntPolynomial`]: dense ℤ[X] arithmetic, gcds, squarefree parts.
//! * [`AlgebraicNumber`]: isolated real roots with exact refinement.
//! * [`RingElement`]: exact arithmetic in ℤ[X]/(P) and certified floors.
//! * [`ComplexCluster`]: Aberth–Ehrlich roots with inclusion radii.

pub mod complex;
pub mod cyclo;
pub mod dyadic;
pub mod poly;
pub mod real;
pub mod ring;

pub use complex::{complex_roots, mahler_measure, roots_f64, ComplexCluster};
pub use cyclo::{cyclotomic_split, CyclotomicSplit};
pub use dyadic::{Dyadic, Interval};
pub use poly::{euler_phi, moebius, IntPolynomial};
pub use real::{
    descartes_count, isolate_real_roots, largest_real_root_above_one, parse_decimal, refine, sign_at_rational, sturm_count, AlgebraicNumber,
    RatInterval,
};
pub use ring::{
    certified_floor, certified_floor_with, certified_sign, floor_and_exactness, reduce_mod,
    FloorOptions, RingElement,
};
