//! Error type shared across the workbench.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {requested} exceeds the configured bound {bound} (set FQG_MAX_CONDUCTOR to raise it)")]
    ConductorOverflow { requested: u64, bound: u64 },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("elements do not commute: {0}")]
    NonCommuting(String),
    #[error("malformed fixture: {0}")]
    Fixture(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
