use thiserror::Error;

/// Errors raised by constructors and analyses. Every variant maps to the
/// "input error" exit class of the command-line tool except
/// [`Error::Invariant`], which signals an internal bug.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("ground set has {0} elements; at most {1} are supported")]
    TooManyElements(usize, usize),
    #[error("duplicate subset {0} in family")]
    DuplicateSubset(String),
    #[error("not a matroid: {0}")]
    NotAMatroid(String),
    #[error("matroid is not simple: {0}")]
    NotSimple(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid set-arrangement: {0}")]
    InvalidArrangement(String),
    #[error("invalid 2-partition: {0}")]
    InvalidTwoPartition(String),
    #[error("invalid dependent triples: {0}")]
    InvalidTriples(String),
    #[error("invalid Lie expression: {0}")]
    InvalidExpression(String),
    #[error("word space {words} exceeds the configured bound {bound} (alphabet {alphabet}, degree {degree})")]
    WordSpaceTooLarge {
        alphabet: usize,
        degree: usize,
        words: u128,
        bound: u64,
    },
    #[error("max degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },
    #[error("block partition error: {0}")]
    InvalidPartition(String),
    #[error("invalid tower: {0}")]
    InvalidTower(String),
    #[error("graph is not chordal: no simplicial vertex among {0}")]
    NotChordal(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
