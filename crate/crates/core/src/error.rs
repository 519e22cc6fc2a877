use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,

    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("non-integer query {0} on a numerical semigroup")]
    NonIntegerQuery(String),

    #[error("{0} is not a nonzero member of the semigroup")]
    NotAMember(i64),

    #[error("operands live over different {0}")]
    Mismatch(&'static str),

    #[error("capability not supported: {0}")]
    Unsupported(String),

    #[error("zero ideal or zero element: {0}")]
    Zero(&'static str),

    #[error("operand is not t-invertible: {0}")]
    NotInvertible(String),

    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("module is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("ideal is not of the form J[Y]: {0}")]
    NotJyForm(String),

    #[error("Northcott exponent exceeded the cap {cap}")]
    CapExceeded { cap: usize },
}
