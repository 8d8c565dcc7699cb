use thiserror::Error;

/// Errors raised by library operations. Failed mathematical checks are not
/// errors; they come back as reports with failing flags.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },

    #[error("strand count must be at least {min}, got {got}")]
    TooFewStrands { min: usize, got: usize },

    #[error("exponent must be at least 1, got {0}")]
    BadExponent(i64),

    #[error("sign must be +1 or -1, got {0}")]
    BadSign(i64),

    #[error("hurwitz move index {index} out of range for {len} factors")]
    MoveIndex { index: usize, len: usize },

    #[error("factor {index} has negative sign; a negative band cannot be drawn transversely")]
    NegativeFactor { index: usize },

    #[error("factorization is not a valid factorization of the full twist")]
    InvalidFactorization,

    #[error("diagram still has {0} crossings among A arcs; stabilize first")]
    Unstabilized(usize),

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("layout needs {rows} rows which exceeds the coordinate resolution")]
    LayoutResolution { rows: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
