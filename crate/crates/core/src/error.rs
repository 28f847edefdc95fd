use std::fmt;

use thiserror::Error;

/// Location-aware parse failure for group expressions, permutations and
/// the line-oriented file formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub message: String,
    /// Byte offset into the parsed text.
    pub position: usize,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at offset {})", self.message, self.position)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("invalid permutation {text:?}: {reason}")]
    Permutation { text: String, reason: String },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("enumeration exceeded the cap of {0} elements")]
    CapExceeded(u64),

    #[error("containment violated: {0}")]
    NotContained(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("{p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: u64 },

    #[error("{group}: generated order {found} differs from the expected {expected}")]
    OrderGate { group: String, expected: String, found: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("syntax error: {0}")]
    Syntax(SyntaxError),

    #[error("fixture {label}: {reason}")]
    Fixture { label: String, reason: String },

    #[error("suite line {line}: {reason}")]
    Suite { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn syntax(message: impl Into<String>, position: usize) -> Self {
        Error::Syntax(SyntaxError { message: message.into(), position })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
