use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series constant term {0} is not invertible")]
    NonInvertibleSeries(String),
    #[error("not a partition: {0:?} (parts must be positive and weakly decreasing)")]
    NotAPartition(Vec<i64>),
    #[error("invalid triple ({0}, {1}, {2}): expected a >= b >= c >= 1")]
    InvalidTriple(i64, i64, i64),
    #[error("alpha({0}) is not a Heisenberg generator: index must be 1 or 5 mod 6")]
    NotHeisenbergIndex(i64),
    #[error("monomials of different degree ({0} vs {1}) are not comparable")]
    DegreeMismatch(u64, u64),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("unknown condition set `{0}`")]
    UnknownConditionSet(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("condition file line {line}: {msg}")]
    ConditionFile { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
