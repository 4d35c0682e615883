use thiserror::Error;

/// Crate-wide error type.
///
/// `Domain` means the input is outside the mathematical domain of the
/// operation (wrong half-plane, coincident branch points, ...), `Precision`
/// means the input is legal but the requested accuracy could not be certified,
/// and `Numeric` means an internal iteration failed to converge.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precision loss: {0}")]
    Precision(String),
    #[error("numerical failure: {0}")]
    Numeric(String),
    #[error("path construction failed: {0}")]
    Path(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
    #[error("invalid argument: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn precision(msg: impl Into<String>) -> Self {
        Error::Precision(msg.into())
    }
    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
    pub fn path(msg: impl Into<String>) -> Self {
        Error::Path(msg.into())
    }
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
