use thiserror::Error;

/// Errors raised by the library. Validation failures of a Frobenius algebra
/// are reported as data (see [`crate::frobenius::ValidationReport`]) rather
/// than through this type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("Frobenius pairing is degenerate (eta is singular)")]
    Degenerate,
    #[error("algebra has no two-sided unit")]
    NoUnit,
    #[error("operation requires a commutative algebra")]
    NonCommutative,
    #[error("{op} is not applicable: {reason}")]
    WrongOperation { op: &'static str, reason: String },
    #[error("size guard exceeded: {0}")]
    Guard(String),
    #[error("series truncation insufficient: {0}")]
    Truncation(String),
    #[error("Laurent polynomial fit failed: {0}")]
    Polynomiality(String),
    #[error("{0}")]
    Shape(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
