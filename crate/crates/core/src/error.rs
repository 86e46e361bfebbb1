use thiserror::Error;

/// Errors raised by the exact algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("arity {0} exceeds the supported maximum of {max}", max = crate::poly::MAX_VARS)]
    ArityTooLarge(usize),

    #[error("invalid index range {start}..={end} for arity {n}")]
    InvalidRange { start: usize, end: usize, n: usize },

    #[error("invalid split {left}+{right} of arity {n}")]
    InvalidSplit { left: usize, right: usize, n: usize },

    #[error("odd generator z_{k} is only defined for k <= n-1 (n = {n})")]
    OddIndexOutOfRange { k: usize, n: usize },

    #[error("operation requires a nonzero element")]
    ZeroInput,

    #[error("parse error at byte {pos}: {reason}")]
    Parse { pos: usize, reason: String },

    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error("invalid module parameters: {0}")]
    InvalidSpec(String),

    #[error("{0} has no square root in Q(i); supply roots explicitly")]
    NoExactSqrt(String),

    #[error("module relation violated: {0}")]
    RelationViolation(String),

    #[error("operators do not commute: {0}")]
    NotCommuting(String),

    #[error("eigenvalues outside Q(i): {0}")]
    EigenvaluesOutsideField(String),

    #[error("module is not absolutely irreducible over Q(i) and no rational witness exists; a splitting field is required")]
    SplittingFieldRequired,

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(pos: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            reason: reason.into(),
        }
    }
}
