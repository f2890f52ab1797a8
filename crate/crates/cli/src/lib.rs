//! Command-line driver: argument parsing, configuration, subcommands and
//! report rendering. [`run`] is the whole program minus the process exit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod commands;
pub mod config;
pub mod definition;
pub mod error;
pub mod render;

pub use config::{RunConfig, SequenceSource};
pub use definition::{load_custom_definition, parse_definition, DefinitionError};
pub use error::{CliError, EXIT_HELD, EXIT_REFUTED, EXIT_USAGE};
pub use render::{render_report, Format, Table};

#[derive(Debug, Parser)]
#[command(
    name = "sunseq",
    version,
    about = "Exact log-behaviour checks and certificates for the sequences R_n and S_n"
)]
pub struct Cli {
    /// Builtin sequence.
    #[arg(long, global = true, default_value = "R", value_parser = ["R", "S"], conflicts_with = "def")]
    pub seq: String,
    /// JSON definition file for a custom sequence.
    #[arg(long, global = true, value_name = "PATH")]
    pub def: Option<PathBuf>,
    /// Largest index reached by default ranges.
    #[arg(long, global = true, default_value_t = 200)]
    pub horizon: u64,
    /// Decimal places in rendered values.
    #[arg(long, global = true, default_value_t = 6)]
    pub digits: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Directory for cached term tables.
    #[arg(long, global = true, env = "SUNSEQ_CACHE_DIR", value_name = "DIR")]
    pub cache_root: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate terms, optionally comparing summation with the recurrence.
    Terms(TermsArgs),
    /// Consecutive quotients z_(n+1)/z_n, exact and decimal.
    Ratios(RangeArgs),
    /// Bound sandwich b_(n+1), r_n, b_n.
    Table1 {
        #[arg(long, default_value_t = 3)]
        from: u64,
        #[arg(long, default_value_t = 9)]
        to: u64,
    },
    /// Exact shape checks over a range.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Certificates with exact witnesses.
    #[command(subcommand)]
    Certify(CertifyCommand),
    /// Bounded evidence for the open questions about R.
    Conjectures(ConjectureArgs),
    /// Read or write OEIS b-files.
    #[command(subcommand)]
    Bfile(BfileCommand),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct RangeArgs {
    #[arg(long)]
    pub from: Option<u64>,
    #[arg(long)]
    pub to: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Sum,
    Recurrence,
    Both,
}

#[derive(Debug, Args)]
pub struct TermsArgs {
    #[command(flatten)]
    pub range: RangeArgs,
    #[arg(long, value_enum, default_value_t = Method::Recurrence)]
    pub method: Method,
    /// Also write the terms to this b-file.
    #[arg(long, value_name = "PATH")]
    pub bfile: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeArg {
    Convex,
    Concave,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Increasing,
    Decreasing,
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// z_(n-1) z_(n+1) against z_n².
    LogShape {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, value_enum, default_value_t = ShapeArg::Convex)]
        shape: ShapeArg,
        /// Accept equality.
        #[arg(long)]
        weak: bool,
    },
    /// r_n against r_(n+1).
    RatioMonotone {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, value_enum, default_value_t = DirectionArg::Increasing)]
        direction: DirectionArg,
    },
    /// r_n² against r_(n-1) r_(n+1).
    RatioLogconcave {
        #[command(flatten)]
        range: RangeArgs,
    },
    /// z_n^(1/n) against z_(n+1)^(1/(n+1)).
    RootMonotone {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, value_enum, default_value_t = DirectionArg::Increasing)]
        direction: DirectionArg,
    },
    /// q_n = z_(n+1)^(1/(n+1)) / z_n^(1/n) strictly decreasing.
    RootLogconcave {
        #[command(flatten)]
        range: RangeArgs,
        /// Permit ranges past n = 60; operands grow cubically.
        #[arg(long)]
        allow_large: bool,
    },
    /// Decimal table of q_n with neighbouring differences.
    RootRatioTrend {
        #[command(flatten)]
        range: RangeArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum CertifyCommand {
    /// b_n < r_n < b_(n+1) on a range.
    Interlacing {
        #[arg(long, default_value_t = 3)]
        from: u64,
        #[arg(long, default_value_t = 8)]
        to: u64,
    },
    /// Symbolic induction step for the bound sandwich.
    InductiveStep,
    /// The three conditions of the n-th root log-concavity criterion.
    Xia {
        /// Rational, e.g. 4 or 9/2.
        #[arg(long, default_value = "4")]
        k0: String,
        #[arg(long, default_value_t = 9)]
        n0: u64,
    },
    /// Full ledger for R: recurrence, ratios, limit, n-th roots.
    Theorem,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    /// First index of the window for the iterated L-operator.
    #[arg(long, default_value_t = 6)]
    pub start: u64,
    #[arg(long, default_value_t = 5)]
    pub depth: u32,
    #[arg(long, default_value_t = 101)]
    pub width: u64,
}

#[derive(Debug, Subcommand)]
pub enum BfileCommand {
    /// Write terms as a b-file (stdout when no --out).
    Export {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Compare a b-file against the selected sequence.
    Import { path: PathBuf },
}

/// Parse `args` (including the program name), execute, and return the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_HELD
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            if let Err(e) = out.write_all(outcome.text.as_bytes()) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            if outcome.held {
                EXIT_HELD
            } else {
                EXIT_REFUTED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Run a parsed command line.
pub fn execute(cli: &Cli) -> Result<commands::Outcome, CliError> {
    let source = match &cli.def {
        Some(path) => SequenceSource::File(path.clone()),
        None => SequenceSource::Builtin(cli.seq.clone()),
    };
    let config = RunConfig::new(
        &source,
        cli.horizon,
        cli.digits,
        cli.format,
        cli.cache_root.clone(),
    )?;
    commands::dispatch(&config, &cli.command)
}
