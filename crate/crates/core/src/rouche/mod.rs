//! Rouché-disk detection of the lenticular zeros of Parry Upper functions.

mod disk;
mod indices;
mod kappa;
mod lenticulus;
mod region;

pub use disk::{rouche_certify, rouche_lhs, winding_number, DiskKind, RoucheDisk};
pub use indices::{
    b_jn, c_n, c_n_from, distance_ratio, h_n, h_n_from, j_n, j_n_asymptotic, j_n_from,
    minimum_gap, refined_radius, refined_radius_majorant, refined_w, CnValue, JnMode, N1, N2,
};
pub use kappa::{
    a_max, a_max_closed_form, c_limit, kappa, minimum_gap_constant, opening_angle, KAPPA,
};
pub use lenticulus::{
    eval_section, find_lenticulus, salem_first_root, DetectionFailure, LenticularZero, Lenticulus,
    LenticulusOptions, ParrySource, ParryUpper, SALEM_N,
};
pub use region::{
    circle_minima, delta_n, guard_parameter, section_thickness, successive_minima,
    zero_free_region, SuccessiveMinimum, ZeroFreeRegion,
};
