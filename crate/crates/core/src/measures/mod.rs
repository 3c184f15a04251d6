//! Mahler measures and the limit constants of lenticular minorants.

mod constants;
mod lenticular;
mod mahler;

pub use constants::{
    constants, l2_chi3, lambda_constant, lambda_r, log_sine_integral, mu_r, romberg,
    trapezoid_steffensen, Bounded, Constants,
};
pub use lenticular::{
    deg_lower_bound, dobrowolski_formula, dobrowolski_minorant, l_r_lower_bound,
    lenticular_measure, mr_jump, salem_bound_check, schinzel_bound, schinzel_c_tilde, LrValue,
    SalemCheck, DEFAULT_ETA,
};
pub use mahler::{
    abc_factorize, mahler, mahler_bounded, mahler_with_tolerance, AbcFactorization, MeasureReport, NumberClass,
    UNIT_CIRCLE_TOL,
};
pub(crate) use mahler::roots_with_multiplicity;
