use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Caller supplied something outside the accepted domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An identity that must hold for correct data did not. Either the input
    /// table was corrupt or there is a bug upstream.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }

    /// Process exit code for this error: 1 for bad input, 2 for a failed
    /// internal verification.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification(_) => 2,
            _ => 1,
        }
    }
}
