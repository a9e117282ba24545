use thiserror::Error;

/// Errors raised by the library.
///
/// Every failure is structured; nothing is silently truncated or approximated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: String, found: String },

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("class functions live on different groups: S_{left} vs S_{right}")]
    GroupMismatch { left: String, right: String },

    #[error("{what}: coordinate {value} exceeds the enumeration cut-off {limit}")]
    CutoffExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid injection {images:?} into a set of size {codomain}")]
    InvalidInjection { images: Vec<usize>, codomain: usize },

    #[error("maps do not compose: {0}")]
    NotComposable(String),

    #[error("not a group action: {0}")]
    NotAGroupAction(String),

    #[error("size {size} is below the stable range of {family}, which starts at {needed}")]
    BelowStableRange {
        family: String,
        size: String,
        needed: String,
    },

    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),

    #[error("rank deficient linear system ({context}): rank {rank} < {unknowns} unknowns")]
    RankDeficient {
        context: String,
        rank: usize,
        unknowns: usize,
    },

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
