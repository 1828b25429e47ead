//! Argument parsing and the resolved run configuration.

use crate::error::CliError;
use clap::{Args, Parser, Subcommand, ValueEnum};
use geocalc_core::Direction;
use std::path::PathBuf;

pub const DEFAULT_PRECISION: usize = 6;
pub const PRECISION_ENV: &str = "GEOCALC_PRECISION";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Forward,
    Backward,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Forward => Direction::Forward,
            DirectionArg::Backward => Direction::Backward,
        }
    }
}

/// How the query point was given: as a decimal or as an exact exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Query {
    Real(f64),
    LogReal(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Difftable,
    Interp,
    Norms,
    Duals,
    AbelCheck,
}

/// A fully resolved invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub input_path: PathBuf,
    pub format: Option<InputFormat>,
    pub direction: Direction,
    pub query_x: Option<Query>,
    pub degree: Option<usize>,
    pub spacing_tolerance: f64,
    pub output_format: OutputFormat,
    pub precision: usize,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Input file (CSV or JSON; inferred from the extension unless --format is given)
    #[arg(long)]
    pub input: PathBuf,

    /// Force the input format instead of inferring it
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,

    /// Relative tolerance on log gaps when validating node spacing
    #[arg(long, default_value_t = geocalc_core::DEFAULT_SPACING_TOLERANCE)]
    pub tolerance: f64,

    /// Report format
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,

    /// Significant digits in text reports (4..=17); GEOCALC_PRECISION
    /// overrides the default when the flag is absent
    #[arg(long, value_parser = clap::value_parser!(u32).range(4..=17))]
    pub precision: Option<u32>,
}

#[derive(Debug, Parser)]
#[command(
    name = "geocalc",
    version,
    about = "Geometric-calculus tables, interpolation, and sequence diagnostics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Print the triangular geometric difference table of a sampled function
    Difftable {
        #[command(flatten)]
        common: CommonArgs,
        /// Label the table as forward or backward differences
        #[arg(long, value_enum, default_value = "forward")]
        direction: DirectionArg,
    },
    /// Interpolate a sampled function at a query point
    Interp {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value = "forward")]
        direction: DirectionArg,
        /// Query point as a decimal
        #[arg(long, conflicts_with = "log_x", required_unless_present = "log_x")]
        x: Option<f64>,
        /// Query point as an exact exponent t, meaning e^t
        #[arg(long)]
        log_x: Option<f64>,
        /// Interpolation degree (defaults to the full table degree)
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Print the sup norm and difference norm of a sequence
    Norms {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print partial-sum traces for the multiplier-space criteria
    Duals {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Evaluate both sides of the summation identities and their log gap
    AbelCheck {
        #[command(flatten)]
        common: CommonArgs,
        /// Number of terms to sum (defaults to the maximum the input allows)
        #[arg(long)]
        degree: Option<usize>,
    },
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig, CliError> {
        let (kind, common, direction, query, degree) = match self.command {
            CliCommand::Difftable { common, direction } => {
                (CommandKind::Difftable, common, direction.into(), None, None)
            }
            CliCommand::Interp {
                common,
                direction,
                x,
                log_x,
                degree,
            } => {
                let query = match (x, log_x) {
                    (Some(v), None) => Some(Query::Real(v)),
                    (None, Some(t)) => Some(Query::LogReal(t)),
                    _ => unreachable!("clap enforces exactly one of --x/--log-x"),
                };
                (CommandKind::Interp, common, direction.into(), query, degree)
            }
            CliCommand::Norms { common } => (
                CommandKind::Norms,
                common,
                Direction::Forward,
                None,
                None,
            ),
            CliCommand::Duals { common } => (
                CommandKind::Duals,
                common,
                Direction::Forward,
                None,
                None,
            ),
            CliCommand::AbelCheck { common, degree } => (
                CommandKind::AbelCheck,
                common,
                Direction::Forward,
                None,
                degree,
            ),
        };
        if common.tolerance <= 0.0 {
            return Err(CliError::parse("--tolerance must be positive"));
        }
        let precision = resolve_precision(common.precision)?;
        Ok(RunConfig {
            command: kind,
            input_path: common.input,
            format: common.format,
            direction,
            query_x: query,
            degree,
            spacing_tolerance: common.tolerance,
            output_format: common.output,
            precision,
        })
    }
}

/// Flag beats environment beats the built-in default of 6.
fn resolve_precision(flag: Option<u32>) -> Result<usize, CliError> {
    if let Some(p) = flag {
        return Ok(p as usize);
    }
    match std::env::var(PRECISION_ENV) {
        Ok(raw) => {
            let p: usize = raw.parse().map_err(|_| {
                CliError::parse(format!("{PRECISION_ENV} must be an integer, got {raw:?}"))
            })?;
            if !(4..=17).contains(&p) {
                return Err(CliError::parse(format!(
                    "{PRECISION_ENV} must be in 4..=17, got {p}"
                )));
            }
            Ok(p)
        }
        Err(_) => Ok(DEFAULT_PRECISION),
    }
}

/// Infers the input format from the file extension; anything but `.json`
/// reads as CSV/lines.
pub fn infer_format(path: &std::path::Path) -> InputFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("json") => InputFormat::Json,
        _ => InputFormat::Csv,
    }
}
