//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("coefficient not representable over {field}: {reason}")]
    BadCoefficient { field: String, reason: String },

    #[error("{0} is not an odd prime below 2^31")]
    InvalidPrime(u64),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("exponent overflow: {0}")]
    ExponentOverflow(String),

    #[error("integer overflow in {0}")]
    IntegerOverflow(&'static str),

    #[error("{0}")]
    Domain(String),

    #[error("ideal is not graded: `{0}` is inhomogeneous")]
    NotGraded(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("pfaffian requires even size, got {0}")]
    OddSize(usize),

    #[error("matrix is not skew-symmetric: {0}")]
    NotSkewSymmetric(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Shorthand for a precondition violation with a formatted message.
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
