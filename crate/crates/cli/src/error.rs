use dslq_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Core(#[from] CoreError),
}

impl CliError {
    /// 2 for bad input or usage, 3 for a violated precondition.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Precondition(_) | CliError::Core(CoreError::Disconnected) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
