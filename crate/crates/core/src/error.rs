use thiserror::Error;

/// Errors raised anywhere in the evaluation stack.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational literal {0:?}")]
    Parse(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: {0}")]
    Pole(String),
    #[error("non-invertible at this truncation")]
    NotInvertible,
    #[error("order {order} not retained (window {lo}..{hi})")]
    OrderNotRetained { order: i64, lo: i64, hi: i64 },
    #[error("cardinality mismatch: {0}")]
    Cardinality(String),
    #[error("index {index} out of range for set of size {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("sampler exhausted after {0} attempts")]
    SamplerExhausted(usize),
    #[error("limit is not finite: {0}")]
    Singular(String),
    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
