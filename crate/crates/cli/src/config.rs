use lenticulus_core::Error;

use crate::output::Format;

/// Settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub precision_bits: u32,
    pub horizon: usize,
    pub eta: usize,
    pub unsafe_small_n: bool,
    pub output: Option<Format>,
}

impl RunConfig {
    pub fn validated(self) -> Result<Self, Error> {
        if self.precision_bits < 53 {
            return Err(Error::Precondition(format!(
                "precision must be at least 53 bits, got {}",
                self.precision_bits
            )));
        }
        if self.horizon < 10 {
            return Err(Error::Precondition(format!(
                "horizon must be at least 10, got {}",
                self.horizon
            )));
        }
        Ok(self)
    }

    /// The requested format, or the subcommand's own default.
    pub fn format_or(&self, default: Format) -> Format {
        self.output.unwrap_or(default)
    }
}
