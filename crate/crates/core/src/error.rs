use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size must be at least 1")]
    EmptySize,
    #[error("not a permutation of 1..{n}: {detail}")]
    InvalidPermutation { n: usize, detail: String },
    #[error("coordinate {index} is {value}, but must lie in [0, {max}]")]
    InvalidInversionSequence {
        index: usize,
        value: usize,
        max: usize,
    },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("n = {n} exceeds the limit {limit} for {what}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("n = {n} is below the minimum {min} for {what}")]
    TooSmall {
        what: &'static str,
        n: usize,
        min: usize,
    },
    #[error("mesh cell ({0}, {1}) lies outside the pattern grid")]
    InvalidMeshCell(usize, usize),
    #[error("{0} is not an involution")]
    NotAnInvolution(String),
    #[error("sequence {0} does not split into slowly increasing blocks of an involution")]
    NotSlowClimbing(String),
    #[error("the lower element is not below the upper element")]
    NotComparable,
    #[error("preference {value} is outside [1, {n}]")]
    PreferenceOutOfRange { value: usize, n: usize },
    #[error("{0:?} is not a parking function")]
    NotParking(Vec<usize>),
    #[error("cycle detected in cover relation through element {0}")]
    Cycle(usize),
    #[error("cover pair references index {index}, but only {len} elements exist")]
    DanglingIndex { index: usize, len: usize },
    #[error("label at index {0} appears more than once")]
    DuplicateLabel(usize),
    #[error("poset with {size} elements exceeds the isomorphism limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
