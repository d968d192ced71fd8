use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(usize, usize, usize),
    #[error("index {index} out of range for order {order}")]
    BadIndex { index: usize, order: usize },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("malformed table: {0}")]
    BadTable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("file error for {path}: {message}")]
    File { path: String, message: String },
    #[error("semigroup order {order} exceeds cap {cap}")]
    Oversize { order: usize, cap: usize },
    #[error("subset or family belongs to a different semigroup")]
    SemigroupMismatch,
    #[error("semigroup is not commutative")]
    NotCommutative,
    #[error("search space of {needed} family-witness pairs exceeds cap {cap}")]
    SearchSpaceCap { needed: u128, cap: u128 },
    #[error("order {order} exceeds decomposition cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("instance exceeds oracle scale: {0}")]
    OracleScaleCap(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("lift verification failed: {0}")]
    LiftVerificationFailed(String),
    #[error("monotonicity violated: {0}")]
    MonotonicityViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
