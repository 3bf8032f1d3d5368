use thiserror::Error;

/// Errors raised for malformed input or violated preconditions.
///
/// A check that fails on well-formed input is not an error; it is reported
/// as a [`crate::report::Verdict`] carrying a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("relation on line {line} has degree {degree}, expected 2")]
    NotQuadratic { line: usize, degree: usize },

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("invalid permutation {0:?}")]
    InvalidPerm(Vec<usize>),

    #[error("word `{word}` occurs in two different relations")]
    AmbiguousRelation { word: String },

    #[error("degree {degree} exceeds the table bound {bound}")]
    DegreeBound { degree: usize, bound: usize },

    #[error("{0}")]
    OutOfRange(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
