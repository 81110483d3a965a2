use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("K({n},{r}) is outside the supported regime: need r >= 2, n >= 2r+1 and n <= 64")]
    KneserRegime { n: usize, r: usize },

    /// The fixation bounds only concern nontrivial permutations.
    #[error("the identity cycle type (1^{0}) has no nontrivial fixation bound")]
    IdentityType(usize),

    #[error("invalid list assignment: {0}")]
    InvalidLists(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("no coloring drawn from the lists is distinguishing")]
    NotDistinguishable,

    #[error("{what} is {value}, above the cap of {cap}")]
    CapExceeded { what: &'static str, value: u128, cap: u128 },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
