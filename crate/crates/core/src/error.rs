use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("{count} compositions exceed the cap {cap}")]
    CompositionCap { count: u128, cap: u128 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
