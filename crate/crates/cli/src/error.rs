use geocalc_core::GeoError;
use thiserror::Error;

/// CLI-level errors, partitioned by exit code: parse/usage problems exit
/// with 2, domain errors from the library exit with 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Domain(#[from] GeoError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        CliError::Parse(msg.into())
    }
}
