use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid generator parameters m={m}, n={n}: need m > n > 0")]
    InvalidParams { m: u64, n: u64 },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unsupported graph: {0}")]
    Unsupported(String),
    #[error("coordinate overflow: {0}")]
    Overflow(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("self-verification failed: {0}")]
    Verification(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status for the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParams { .. }
            | Error::InvalidGraph(_)
            | Error::Infeasible(_)
            | Error::Format(_)
            | Error::Io(_)
            | Error::Json(_) => 2,
            Error::Unsupported(_) => 3,
            Error::Overflow(_) => 4,
            Error::Verification(_) => 5,
            Error::Invariant(_) => 6,
        }
    }
}
