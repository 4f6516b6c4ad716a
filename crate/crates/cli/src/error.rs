use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("config {path}: {message}")]
    Config { path: String, message: String },

    #[error(transparent)]
    Numeric(#[from] fdrelay::Error),

    #[error("{failed} of {total} validation cases failed")]
    Validation { failed: usize, total: usize },

    #[error("I/O: {0}")]
    Io(#[from] std::io::Error),

    #[error("CSV: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Config { .. } | CliError::Io(_) | CliError::Csv(_) => 1,
            CliError::Validation { .. } => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
