use thiserror::Error;

/// Input errors are the caller's fault; `Violation` means an identity that should hold failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("not lci: {0}")]
    NonLci(String),
    #[error("invariant violated: {0}")]
    Violation(String),
    #[error("parse error at {path}: {msg}")]
    Parse { path: String, msg: String },
}

impl Error {
    pub fn is_violation(&self) -> bool {
        matches!(self, Error::Violation(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn violation<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Violation(msg.into()))
}
