use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is not supported, need p >= 5")]
    CharacteristicTooSmall(u64),
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("field has no square root of -1")]
    NoSquareRootOfMinusOne,
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("representation violates torsion conditions: {0}")]
    InvalidRepresentation(String),
    #[error("field of order {order} exceeds the exhaustive limit {limit}")]
    FieldTooLarge { order: u64, limit: u64 },
    #[error("degenerate equation: {0}")]
    Degenerate(String),
    #[error("vertices live on different trees")]
    PlaceMismatch,
    #[error("word is trivial")]
    TrivialWord,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
