use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("element is not invertible (|det P| = {det:e})")]
    NotInvertible { det: f64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degenerate form: {0}")]
    Degenerate(String),
    #[error("point outside the domain: {0}")]
    Domain(String),
    #[error("path leaves the invertible set at t = {0}")]
    PathNotInvertible(f64),
    #[error("sampling failed: {0}")]
    Sampling(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Schema(_) | Error::InvalidParameter(_) | Error::DimensionMismatch { .. } => 2,
            Error::Sampling(_) => 3,
            Error::Io(_) => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}
