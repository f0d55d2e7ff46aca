use thiserror::Error;

/// Crate-wide error type.
#[derive(Error, Debug)]
pub enum Error {
    /// A precondition on an operation's inputs was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A file exists but its contents do not conform to the expected format.
    #[error("corrupt file {path}: {reason}")]
    CorruptFile { path: String, reason: String },

    /// Training diverged; the offending loss branch is named.
    #[error("non-finite loss in {branch} at step {step}")]
    NonFiniteLoss { branch: &'static str, step: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn corrupt(path: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::CorruptFile {
            path: path.into(),
            reason: reason.into(),
        }
    }
}
