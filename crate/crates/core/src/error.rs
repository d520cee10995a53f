//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Field construction rejected the spec (non-prime p, reducible modulus, order cap).
    InvalidField(String),
    /// Inversion of zero or an operation outside the element's field.
    NotInvertible,
    /// Matrix/vector shapes or fields do not agree.
    DimensionMismatch(String),
    /// A bit-matrix failed fooling-pattern validation.
    InvalidPattern {
        row: usize,
        col: usize,
        reason: PatternViolation,
    },
    /// Argument outside the documented domain (densities, bound hypotheses, ...).
    Domain(String),
    /// A search-space precheck exceeded the configured budget.
    BudgetExceeded { needed: u128, budget: u128 },
    /// Tee extraction or reconstruction could not proceed.
    Tee(String),
    /// Reconstruction found tee data with no rank-s completion; carries the first bad cell.
    InconsistentTee { row: usize, col: usize },
    /// Malformed G-pattern column set.
    InvalidGPattern(String),
    /// Text parsing of matrices, patterns, polynomials or configs failed.
    Parse(String),
    /// Experiment configuration rejected (unknown key, bad value).
    Config(String),
    /// A cross-checked identity failed at runtime; indicates a bug.
    Invariant(String),
    Io(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternViolation {
    ZeroDiagonal,
    OppositePair,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidField(msg) => write!(f, "invalid field: {msg}"),
            Error::NotInvertible => write!(f, "element is not invertible"),
            Error::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::InvalidPattern { row, col, reason } => match reason {
                PatternViolation::ZeroDiagonal => {
                    write!(f, "invalid fooling pattern: zero diagonal at ({row},{col})")
                }
                PatternViolation::OppositePair => write!(
                    f,
                    "invalid fooling pattern: opposite pair ({row},{col}) and ({col},{row}) both 1"
                ),
            },
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "search budget exceeded: needs {needed}, budget {budget}")
            }
            Error::Tee(msg) => write!(f, "tee error: {msg}"),
            Error::InconsistentTee { row, col } => {
                write!(f, "no rank-s completion: tee cell ({row},{col}) is inconsistent")
            }
            Error::InvalidGPattern(msg) => write!(f, "invalid G-pattern: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Config(msg) => write!(f, "config error: {msg}"),
            Error::Invariant(msg) => write!(f, "invariant violated: {msg}"),
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
