use thiserror::Error;

/// Errors raised by covera operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("trivial parameters (v={v}, k={k}, lambda={lambda}): need 3 <= k < v and lambda >= 1")]
    TrivialParameters { v: i64, k: i64, lambda: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed block #{index}: {reason}")]
    MalformedBlock { index: usize, reason: String },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("design is neither a covering nor a packing")]
    NeitherCoveringNorPacking,

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("soundness violation: {0}")]
    SoundnessViolation(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("{0} is not a supported prime power")]
    NotPrimePower(u64),

    #[error("outside domain: {0}")]
    OutOfDomain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
