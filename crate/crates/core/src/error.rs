use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} out of range 1..=30")]
    DegreeOutOfRange(u32),
    #[error("field of order {order} exceeds the table limit {limit}")]
    FieldTooLarge { order: u128, limit: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus is not irreducible over the prime field")]
    NotIrreducible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("base {0} is not a power of the characteristic")]
    IncompatibleBase(u64),
    #[error("no embedding: {0}")]
    NoEmbedding(String),
    #[error("unsupported in characteristic 2: {0}")]
    EvenCharacteristic(&'static str),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size guard exceeded: {0}")]
    Guard(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("rank deficiency: expected {expected}, got {got}")]
    RankDeficient { expected: usize, got: usize },
    #[error("point count mismatch: expected {expected}, got {got}")]
    PointCount { expected: usize, got: usize },
    #[error("singular pencil: {0}")]
    SingularPencil(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
