use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be between 1 and 26, got {0}")]
    InvalidAlphabetSize(usize),

    #[error("letter index {letter} out of range for alphabet of size {size}")]
    LetterOutOfRange { letter: u8, size: usize },

    #[error("invalid character {0:?}: words are lowercase ASCII letters")]
    InvalidWordChar(char),

    #[error("words are over different alphabets")]
    AlphabetMismatch,

    #[error("{op} requires a non-empty word")]
    EmptyWord { op: &'static str },

    #[error("position {pos} out of range 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("positions must be strictly ascending")]
    PositionsNotAscending,

    #[error("vertex {vertex} out of range 1..={order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("not a Lyndon word: {0:?}")]
    NotLyndon(String),

    #[error("{0}")]
    InvalidArgument(String),

    /// An enumeration would exceed the configured budget. The CLI maps this
    /// to its own exit code so scripts can tell "too big" from "bad input".
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A checked internal invariant failed; indicates a bug, not bad input.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
}

pub type Result<T> = std::result::Result<T, Error>;
