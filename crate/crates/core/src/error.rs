use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("group too large: closure exceeds {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("lattice too large: group order {order} exceeds lattice cap {cap}")]
    LatticeTooLarge { order: usize, cap: usize },

    #[error("not a member: {0}")]
    NotAMember(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("basis does not generate a system: {0}")]
    NotASystem(String),

    #[error("basis members do not permute: {0}")]
    BasisMembersDoNotPermute(String),

    #[error("unknown group {name:?}; available entries: {available}")]
    UnknownGroup { name: String, available: String },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid prime set: {0}")]
    InvalidPrimeSet(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
