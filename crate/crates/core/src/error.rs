use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("malformed literal: {0}")]
    MalformedLiteral(String),
    #[error("malformed ring descriptor: {0}")]
    MalformedDescriptor(String),
    #[error("division by non-unit: {0}")]
    DivisionByNonUnit(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("torsion coefficient ring: {0}")]
    TorsionRing(String),
    #[error("truncation order exceeded: {0}")]
    TruncationExceeded(String),
    #[error("constant term must be 1: {0}")]
    ConstantTermNotOne(String),
    #[error("not twisted-nilpotent: {0}")]
    NotNilpotent(String),
    #[error("invalid group data: {0}")]
    InvalidGroup(String),
    #[error("group order bound exceeded: order {order} > bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("not a prime: {0}")]
    NotPrime(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("family not closed under subgroups and conjugation: {0}")]
    FamilyNotClosed(String),
}
