use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Core(#[from] compoundlab::Error),
}

impl CliError {
    /// 2 for unreadable input or arguments, 3 for well-formed input the
    /// operation cannot accept.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::UnknownSuite(_) => 2,
            CliError::Core(compoundlab::Error::Parse(_)) => 2,
            CliError::Core(_) => 3,
        }
    }
}
