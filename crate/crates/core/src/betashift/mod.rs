//! The β-shift: greedy expansions of 1, Parry's admissibility conditions,
//! Parry polynomials and the dynamical degree.

pub mod degree;
pub mod expansion;
pub mod parry;
pub mod word;

pub use degree::{
    dyg_integer_part_formula, dynamical_degree, dynamical_degree_f64, ostrowski_report,
    OstrowskiReport, GOLDEN_MEAN,
};
pub use expansion::{
    renyi_expansion, renyi_expansion_float, BetaExpansion, BetaSource, ExpansionStatus,
    DEFAULT_HORIZON,
};
pub use parry::{
    beta_from_digits, parry_polynomial, upper_function_coeffs, upper_function_exponents,
    ParryCase, ParryPolynomial,
};
pub use word::{c_word, compare_shifted, is_admissible, is_lyndon, lex_cmp, zero_gaps, DigitWord, Tail};
