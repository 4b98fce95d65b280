//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("operation undefined on the zero vector")]
    ZeroVector,

    #[error("resource ceiling exceeded: {what} = {value} > limit {limit}")]
    TooLarge {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("matrix is rank deficient")]
    RankDeficient,

    #[error("code has dimension zero")]
    DegenerateCode,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("minimum distance parity mismatch: expected {expected} d")]
    ParityMismatch { expected: &'static str },

    #[error("codeword weight must be even")]
    OddWeight,

    #[error("bound condition not met: {0}")]
    ConditionNotMet(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
