use thiserror::Error;

/// Errors raised while constructing or using finite quandles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    /// One of the three quandle axioms failed. The witness holds the
    /// elements that break it: axiom 1 -> [x], axiom 2 -> [y] (the bad
    /// column), axiom 3 -> [x, y, z].
    #[error("quandle axiom {axiom} violated at {witness:?}")]
    AxiomViolation { axiom: u8, witness: Vec<usize> },

    #[error("table is not square: expected {expected} columns, row {row} has {got}")]
    ShapeError {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("table entry {value} out of range 0..{n}")]
    EntryOutOfRange { value: usize, n: usize },

    #[error("element index {index} out of range 0..{n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("constant term {c0} is not a unit mod {n}; t is not invertible")]
    NonUnitConstantTerm { c0: usize, n: usize },

    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}
