use thiserror::Error;

/// Errors raised anywhere in the pipeline.
///
/// The CLI maps the first three variants to exit codes 2, 3 and 4.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("invalid isometry: {0}")]
    InvalidIsometry(String),
    #[error("verification mismatch: {0}")]
    Verification(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidLattice(_) => 2,
            Error::InvalidIsometry(_) => 3,
            Error::Verification(_) => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
