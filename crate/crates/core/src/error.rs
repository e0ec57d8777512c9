use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("evaluation undefined: {0}")]
    Evaluation(String),

    #[error("unknown or unsupported Dynkin type `{0}`")]
    InvalidType(String),

    #[error("node {node} out of range for rank {rank}")]
    InvalidNode { node: usize, rank: usize },

    #[error("not a positive root: {0:?}")]
    NotARoot(Vec<i32>),

    #[error("pairing precondition violated: expected {expected}, found {found}")]
    PairingMismatch { expected: i32, found: i32 },

    #[error("element {0:?} lies outside the parabolic subgroup")]
    OutsideParabolic(Vec<usize>),

    #[error("operands belong to different Hecke algebras")]
    ParentMismatch,

    #[error("parse error at {position} near `{token}`: {reason}")]
    Parse { position: usize, token: String, reason: String },

    #[error("invalid representation data: {0}")]
    InvalidTheta(String),

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
