use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter is outside the domain of the object or formula.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A composition part violates the precondition of a map.
    #[error("part {part} at index {index} {reason}")]
    PartViolation {
        index: usize,
        part: u32,
        reason: String,
    },

    /// Rational expansion needs a denominator with constant term +1 or -1.
    #[error("denominator constant term {0} is not a unit in the integers")]
    NonUnitConstant(String),

    #[error("b-file line {line}: {message}")]
    BFileParse { line: usize, message: String },

    #[error("b-file line {line}: expected index {expected}, found {found}")]
    NonConsecutive {
        line: usize,
        expected: i64,
        found: i64,
    },

    #[error(
        "sequences do not overlap (sequence {seq_lo}..={seq_hi}, b-file {file_lo}..={file_hi})"
    )]
    EmptyOverlap {
        seq_lo: i64,
        seq_hi: i64,
        file_lo: i64,
        file_hi: i64,
    },

    #[error("unknown name `{0}`")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}
