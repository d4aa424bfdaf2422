use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation would have to walk more than 2^cap elements.
    #[error("enumeration cap exceeded: {strategy} needs 2^{needed_bits} elements, cap is 2^{cap_bits}")]
    CapExceeded {
        strategy: &'static str,
        needed_bits: u32,
        cap_bits: u32,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid construction: {0}")]
    Invalid(String),

    /// `augment` was handed a vector already in the span.
    #[error("vector is already a member of the code")]
    AlreadyMember,

    /// A sparsifier oracle returned a string that is not 1/2-thick.
    #[error("sparsifier oracle contract breach: {0}")]
    OracleContract(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Text-format error with a 1-based line number and, where it makes
/// sense, a 1-based column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: Option<usize>,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column: None,
            message: message.into(),
        }
    }

    pub fn with_column(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column: Some(column),
            message: message.into(),
        }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.column {
            Some(col) => write!(f, "line {}, column {}: {}", self.line, col, self.message),
            None => write!(f, "line {}: {}", self.line, self.message),
        }
    }
}
