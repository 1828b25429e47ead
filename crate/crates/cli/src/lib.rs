//! Command-line front end: table and sequence ingestion, difference-table
//! rendering, interpolation queries, norm and multiplier-space diagnostics.

pub mod config;
pub mod error;
pub mod input;
pub mod render;
pub mod run;

pub use config::{CommandKind, InputFormat, OutputFormat, Query, RunConfig};
pub use error::CliError;
pub use run::run;

use clap::Parser;
use std::process::ExitCode;

/// Parses arguments, executes the requested command, and maps errors to the
/// documented exit codes (1 domain, 2 parse/usage).
pub fn main_impl() -> ExitCode {
    let cli = config::Cli::parse();
    let config = match cli.into_config() {
        Ok(config) => config,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(err.exit_code());
        }
    };
    match run(&config) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
