use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relations contain a cycle through elements {0} and {1}")]
    Cycle(usize, usize),

    #[error("element id {id} out of range for {n} elements")]
    IdOutOfRange { id: usize, n: usize },

    #[error("input is not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("arity must be at least 1")]
    InvalidArity,

    #[error("interval or box has a lower coordinate above its upper coordinate, or an incomparable value")]
    InvalidCoordinates,

    #[error("forest covers {forest} elements but the poset has {poset}")]
    ElementMismatch { forest: usize, poset: usize },

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("chosen slot {0} is absent or not compatible with the interval")]
    IncompatibleChoice(String),

    #[error("instance of size {n} exceeds the exhaustive search limit {max}")]
    TooLarge { n: usize, max: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
