use alloc::string::String;

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("degree {0} is odd")]
    OddDegree(usize),
    #[error("expected an odd permutation")]
    EvenPermutation,
    #[error("membership is undefined for an order-bound descriptor")]
    NoMembership,
    #[error("group parameters differ")]
    ParamsMismatch,
    #[error("not an element of G: {0}")]
    NotInGroup(String),
    #[error("generation precondition failed: {0}")]
    Generation(String),
    #[error("{0} is not a competitor family")]
    NotCompetitor(String),
    #[error("size {size} exceeds the cap {cap}")]
    CapExceeded { size: u128, cap: u128 },
    #[error("cyclic groups are not coverable")]
    NotCoverable,
    #[error("group is not 2-generated, clique number undefined")]
    NotTwoGenerated,
    #[error("search interrupted")]
    Interrupted,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
