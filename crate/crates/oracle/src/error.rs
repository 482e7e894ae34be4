use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("not a Yetter-Drinfeld module: {0}")]
    InvalidModule(String),
    /// The grading read off a half-braiding is not a valid grading, or does
    /// not reproduce the half-braiding. Signals a convention mismatch.
    #[error("conversion failed: {0}")]
    ConversionFailure(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Engine(#[from] bilax_core::Error),
}

pub type Result<T> = std::result::Result<T, OracleError>;
