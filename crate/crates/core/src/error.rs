//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failures surfaced by the library.
///
/// The variants split into two families that the command-line front end maps
/// to different exit codes: violated preconditions (bad input, out-of-range
/// indices) and certification failures (precision exhaustion, divergence,
/// a numeric certificate that does not hold).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cannot parse polynomial: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("modulus polynomial is not monic")]
    NotMonic,

    #[error("word is not Lyndon (self-admissible)")]
    NotLyndon,

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("precision exhausted after {bits} bits while {what}")]
    PrecisionExhausted { bits: u32, what: String },

    #[error("iteration did not converge: {0}")]
    NoConvergence(String),

    #[error("certificate does not hold: {0}")]
    Certification(String),

    #[error("expansion horizon of {0} digits exceeded")]
    HorizonExceeded(usize),

    #[error("convolution mismatch at coefficient {index}: expected {expected}, got {got}")]
    ConvolutionMismatch {
        index: usize,
        expected: String,
        got: String,
    },

    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by a failed
    /// numeric certificate.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Precondition(_)
                | Error::NotMonic
                | Error::NotLyndon
                | Error::OutOfRange(_)
                | Error::Inconsistent(_)
                | Error::HorizonExceeded(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for building a precondition error.
pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
