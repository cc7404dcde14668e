use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("q = {q} is not a prime power ({factorization})")]
    NotPrimePower { q: u32, factorization: String },

    #[error("field order {0} is outside the supported range 2..=256")]
    FieldOrderOutOfRange(u32),

    #[error("element {value} does not belong to GF({q})")]
    ElementOutOfRange { value: u32, q: u32 },

    #[error("zero has no multiplicative inverse")]
    InverseOfZero,

    #[error("operands live in different fields: GF({0}) and GF({1})")]
    FieldMismatch(u32, u32),

    #[error("invalid generator matrix: {0}")]
    InvalidGenerator(String),

    #[error("coordinate {index} is out of range for a code of length {n} (coordinates are 1-based)")]
    CoordinateOutOfRange { index: usize, n: usize },

    #[error(
        "exhaustive enumeration needs {needed} codewords but the cap is {cap}; \
         raise the enumeration cap to proceed"
    )]
    EnumerationCap { needed: u128, cap: u64 },

    #[error("the code is zero-dimensional: {0}")]
    ZeroDimensional(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("construction failed: {message}\ntrace:\n{trace}")]
    Construction { message: String, trace: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed code file: {0}")]
    Parse(#[from] serde_json::Error),
}
