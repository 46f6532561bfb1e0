use thiserror::Error;

use crate::category::CategoryId;
use crate::partition::ColoredWord;

/// Errors shared by the whole crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: expected {expected} legs, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("not a valid partition: {0}")]
    InvalidPartition(String),

    #[error("signature is only defined for partitions with all blocks of even size")]
    OddBlock,

    #[error("{0:?} is not a block of the partition")]
    NotABlock(Vec<usize>),

    #[error("cannot compose: lower word of the first partition differs from upper word of the second")]
    ComposeWordMismatch,

    #[error("rotation needs at least one upper leg")]
    NothingToRotate,

    #[error("word of {legs} legs exceeds the enumeration limit of {limit}")]
    SizeLimitExceeded { legs: usize, limit: usize },

    #[error("singular Gram matrix for {category} on word {word:?} at dimension {dim}")]
    SingularGram {
        category: CategoryId,
        word: ColoredWord,
        dim: u64,
    },

    #[error("index {value} out of range 1..={bound}")]
    IndexOutOfRange { value: u64, bound: u64 },

    #[error("invalid space parameters: need L <= M <= N, got L={l}, M={m}, N={n}")]
    BadSpaceParams { l: u64, m: u64, n: u64 },

    #[error("moment word, rows and columns must have equal length")]
    MomentShapeMismatch,

    #[error("invalid family parameter: {0}")]
    BadFamily(String),

    #[error("enumeration of {required} configurations exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("exact oracle arithmetic is only available for s in {{2, 4}}, got s={0}")]
    UnsupportedOracleRing(u32),

    #[error("Monte Carlo sampling needs a classical family (o or u), got {0}")]
    NonClassicalFamily(String),

    #[error("regime parameter {name}*N is not an integer at N={n}")]
    RegimeNotIntegral { name: &'static str, n: u64 },

    #[error("invalid regime: {0}")]
    BadRegime(String),

    #[error("K={k} exceeds min(M, N)={bound}: no non-overlapping embedding exists")]
    KOutOfRange { k: u64, bound: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
