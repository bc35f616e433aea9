use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] cubesym_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("CSV output: {0}")]
    Csv(#[from] csv::Error),
    #[error("rejected: {0}")]
    Rejected(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> CliError {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }

    /// 1 usage or bad input, 2 budget or size guard, 3 a checker rejected a result.
    pub fn exit_code(&self) -> u8 {
        use cubesym_core::Error as E;
        match self {
            CliError::Core(E::SearchBudgetExceeded(_) | E::SizeGuard { .. }) => 2,
            CliError::Core(E::Inconsistent(_)) | CliError::Rejected(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
