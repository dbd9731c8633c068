use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("3-form is not stable: {0}")]
    NotStable(String),
    #[error("symmetric tensor is not traceless")]
    NotTraceless,
    #[error("3-form does not lie in the 27-dimensional summand")]
    NotIn27,
    #[error("tau0 must be nonzero")]
    ZeroTau,
    #[error("not skew-symmetric: {0}")]
    NotSkew(String),
    #[error("structure is not nearly parallel: {0}")]
    NotNearlyParallel(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("invalid highest weight: {0}")]
    BadWeight(String),
    #[error("not a simple ideal: {0}")]
    NotAnIdeal(String),
    #[error("fixture `{fixture}` is not defined for space `{space}`")]
    WrongSpace { fixture: String, space: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
