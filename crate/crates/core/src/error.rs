use thiserror::Error;

/// Errors raised by the library.
///
/// [`Error::InsufficientPrecision`] is kept apart from the other variants so
/// that callers can retry at a higher truncation order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{d} is not coprime to the conductor {n}")]
    NotCoprime { d: i64, n: u64 },

    #[error("conductor {from} does not divide target conductor {to}")]
    ConductorMismatch { from: u64, to: u64 },

    #[error("grading mismatch: (2pi)^({left}/2) vs (2pi)^({right}/2)")]
    GradingMismatch { left: i32, right: i32 },

    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported level {0}")]
    UnsupportedLevel(u32),

    #[error("not in the ring at the given precision: {0}")]
    NotInRing(String),

    #[error("internal consistency check failed: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_precision(&self) -> bool {
        matches!(self, Error::InsufficientPrecision(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
