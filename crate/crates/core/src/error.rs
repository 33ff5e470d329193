use alloc::string::String;

/// Errors raised by the algebra and linear-algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable count {0} is outside 1..={max}", max = crate::MAX_VARS)]
    VariableCount(usize),
    #[error("exponent does not fit in 16 bits")]
    ExponentOverflow,
    #[error("variable counts differ: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("degrees differ: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("{0} is undefined at 0")]
    UndefinedAtZero(&'static str),
    #[error("no spike of degree {n} in {k} variables: mu({n}) = {mu} > {k}")]
    NoSpike { n: u32, k: usize, mu: u32 },
    #[error("vector of length {got} used with {expected} columns")]
    LengthMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not an admissible monomial of this quotient")]
    NotAdmissible(String),
    #[error("term {0} has weight above the block weight")]
    AboveWeight(String),
    #[error("degree {n} is not 2*{d} + {k}")]
    KamekoDegree { k: usize, d: u32, n: u32 },
    #[error("invalid ring map: {0}")]
    RingMap(&'static str),
    #[error("malformed echelon data: {0}")]
    Echelon(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
