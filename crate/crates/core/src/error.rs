use std::fmt;

/// Errors produced by exact computations.
///
/// `Degenerate` is the only error a caller is expected to recover from: it
/// signals that a fixed numeric specialization (q0, t0) hit a pole or a
/// singular linear system, and the caller should resample. Everything else
/// indicates either bad input or an internal cross-check failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by an exact symbolic zero.
    DivisionByZero,
    /// A numeric specialization (q0, t0) turned out to be degenerate.
    Degenerate(String),
    /// A linear system was singular in symbolic mode, where genericity
    /// should prevent it.
    Singular(String),
    /// Two routes that must agree exactly did not.
    Inconsistent(String),
    /// Malformed input (partition text, operand spec, flag combination).
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Degenerate(msg) => write!(f, "degenerate specialization: {msg}"),
            Error::Singular(msg) => write!(f, "singular system: {msg}"),
            Error::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
            Error::Invalid(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
