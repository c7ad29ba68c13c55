use thiserror::Error;

pub mod exit_code {
    pub const SUCCESS: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE_ERROR: i32 = 2;
    pub const IO_ERROR: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit_code::USAGE_ERROR,
            CliError::Io(_) => exit_code::IO_ERROR,
            // Arithmetic overflow and the like are implementation faults.
            CliError::Internal(_) => exit_code::VERIFICATION_FAILED,
        }
    }
}

impl From<compsearch::Error> for CliError {
    fn from(e: compsearch::Error) -> Self {
        match e {
            compsearch::Error::Arithmetic(_) | compsearch::Error::EntangledAncilla => {
                CliError::Internal(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}
