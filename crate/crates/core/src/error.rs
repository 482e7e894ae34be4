use alloc::string::String;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not idempotent (defect {defect:e})")]
    NotIdempotent { defect: f64 },
    #[error("rank decision unstable: singular value {value:e} sits near the threshold")]
    RankUnstable { value: f64 },
    #[error("matrix is numerically singular")]
    Singular,
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("unknown builtin group `{0}`")]
    UnknownGroup(String),
    #[error("irreducible decomposition did not converge: {0}")]
    ConvergenceFailure(String),
    #[error("fusion multiplicity {value} is not integral")]
    NonIntegral { value: f64 },
    #[error("composition pairing is singular (smallest singular value {sigma:e})")]
    SingularPairing { sigma: f64 },
    #[error("invalid centre object: {0}")]
    InvalidObject(String),
    #[error("morphism mismatch: {0}")]
    MorphismMismatch(String),
}

pub type Result<T> = core::result::Result<T, Error>;
