//! Fracturability `P_β = U_β · f_β`, rewriting trails and the Taylor
//! coefficients of `f_β` at `1/β`.

mod series;
mod taylor;
mod trail;

pub use series::{convolution_check, convolution_residuals, growth_rate, u_beta_coeffs, PowerSeriesZ};
pub use taylor::{binomial, cyclotomic_jump, taylor_c, JumpExperiment};
pub use trail::{
    check_trail_tails, digit_section, g_qj, trail_p_to_f, trail_s_to_p, RewritingTrail,
    TrailDirection, TrailTailCheck,
};
