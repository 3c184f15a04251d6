//! `lenticulus`: β-expansions, trinomial roots, lenticuli and Mahler
//! measures from the command line.

mod commands;
mod config;
mod goldens;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lenticulus_core::{Error, DEFAULT_PRECISION};

use crate::config::RunConfig;
use crate::output::{Format, Report};

const EXIT_PRECONDITION: u8 = 2;
const EXIT_CERTIFICATION: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "lenticulus", version, about = "Parry Upper functions, trinomial roots and lenticular Mahler measures")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Working precision in bits.
    #[arg(long, global = true, env = "LENTICULUS_PRECISION", default_value_t = DEFAULT_PRECISION)]
    bits: u32,
    /// Maximal number of greedy β-expansion steps.
    #[arg(long, global = true, default_value_t = 100_000)]
    horizon: usize,
    /// Index η of the Schinzel–Zassenhaus type bound.
    #[arg(long, global = true, default_value_t = 259)]
    eta: usize,
    /// Worker threads for batch subcommands.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Run size-dependent searches below their validity thresholds.
    #[arg(long, global = true)]
    unsafe_small_n: bool,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, visible_alias = "emit")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rényi expansion d_β(1) and Parry polynomial.
    Expand(commands::ExpandArgs),
    /// Dynamical degree of β.
    Dyg(commands::BaseArgs),
    /// Roots of −1 + z + z^n with their asymptotic developments.
    Trinomial(commands::TrinomialArgs),
    /// Rouché-certified lenticular zeros of a Parry Upper function.
    Lenticulus(commands::LenticulusArgs),
    /// Mahler measure, house, class and A·B·C splitting.
    Mahler(commands::PolyArgs),
    /// Coefficients b_r of U_β with convolution residuals.
    Fracture(commands::FractureArgs),
    /// Limit constants with error bounds.
    Constants,
    /// Salem numbers against the θ_31⁻¹ bound, one polynomial per line.
    SalemScan(commands::FileArgs),
    /// Angular discrepancy of root sets.
    Equidist(commands::EquidistArgs),
    /// Regenerates the acceptance table.
    Goldens,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("CSV output: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_precondition() => EXIT_PRECONDITION,
            CliError::Core(_) => EXIT_CERTIFICATION,
            CliError::Io { .. } | CliError::Csv(_) => EXIT_PRECONDITION,
        }
    }
}

/// A rendered result, together with a certification failure that still
/// lets the result be written.
pub struct Outcome {
    pub report: Report,
    pub default_format: Format,
    pub uncertified: Option<String>,
}

impl Outcome {
    pub fn ok(report: Report, default_format: Format) -> Self {
        Outcome {
            report,
            default_format,
            uncertified: None,
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let g = cli.global;
    let cfg = RunConfig {
        precision_bits: g.bits,
        horizon: g.horizon,
        eta: g.eta,
        unsafe_small_n: g.unsafe_small_n,
        output: g.format,
    }
    .validated()?;
    if let Some(t) = g.threads {
        // Fails only when a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let outcome = match &cli.command {
        Command::Expand(a) => commands::expand(&cfg, a)?,
        Command::Dyg(a) => commands::dyg(&cfg, a)?,
        Command::Trinomial(a) => commands::trinomial(&cfg, a)?,
        Command::Lenticulus(a) => commands::lenticulus(&cfg, a)?,
        Command::Mahler(a) => commands::mahler(&cfg, a)?,
        Command::Fracture(a) => commands::fracture(&cfg, a)?,
        Command::Constants => commands::constants(&cfg),
        Command::SalemScan(a) => commands::salem_scan(&cfg, a)?,
        Command::Equidist(a) => commands::equidist(&cfg, a)?,
        Command::Goldens => goldens::goldens(&cfg)?,
    };
    let text = outcome.report.render(cfg.format_or(outcome.default_format))?;
    match &g.out {
        Some(path) => std::fs::write(path, &text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => print!("{text}"),
    }
    Ok(match outcome.uncertified {
        Some(why) => {
            eprintln!("lenticulus: certification failed: {why}");
            EXIT_CERTIFICATION
        }
        None => 0,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("lenticulus: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn global_flags_after_subcommand() {
        let cli = Cli::try_parse_from(["lenticulus", "constants", "--bits", "100", "--format", "csv"]).unwrap();
        assert_eq!(cli.global.bits, 100);
        assert_eq!(cli.global.format, Some(Format::Csv));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Core(Error::Precondition("x".into())).exit_code(), EXIT_PRECONDITION);
        assert_eq!(CliError::Core(Error::Certification("x".into())).exit_code(), EXIT_CERTIFICATION);
    }
}
