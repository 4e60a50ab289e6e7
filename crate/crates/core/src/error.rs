use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input is not sorted in nonincreasing order: {0}")]
    Unsorted(String),

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("diagram has {actual} boxes, expected {expected}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("letter {letter} outside alphabet [1..{alphabet}]")]
    LetterOutOfRange { letter: u32, alphabet: u32 },

    #[error("word has repeated letters; standardize it first")]
    RepeatedLetters,

    #[error("probabilities must be strictly decreasing and positive: {0}")]
    NotDistinct(String),

    #[error("enumeration of {requested} items exceeds the cap of {cap}")]
    CapExceeded { requested: u128, cap: u128 },

    #[error("exhaustive oracle refuses n = {n} (limit {limit})")]
    OracleTooLarge { n: usize, limit: usize },

    #[error("negative entry {0}")]
    NegativeEntry(f64),

    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
