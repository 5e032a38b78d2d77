use thiserror::Error;

/// Errors raised by the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("cannot parse {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("empty sequence")]
    EmptySequence,

    #[error("the zero form has no leading term")]
    ZeroForm,

    #[error("form is not in LL (z divides its leading term)")]
    NotLeading,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("subform index {index} outside [{lo}, {hi}]")]
    SubformRange { index: i64, lo: i64, hi: i64 },

    #[error("zero inverse form")]
    ZeroInverseForm,

    #[error("infinite field: the set cannot be enumerated")]
    InfiniteField,

    #[error("enumeration of {0} elements exceeds the limit")]
    TooMany(u128),

    #[error("sequence length {len} exceeds the brute-force bound {bound}")]
    TooLong { len: usize, bound: usize },

    #[error("{0} is not a power of two")]
    NotPowerOfTwo(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
