use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid variable context: {0}")]
    InvalidContext(String),

    #[error("invalid term order: {0}")]
    InvalidOrder(String),

    #[error("binomial has identical terms")]
    ZeroBinomial,

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("integer overflow in {0}")]
    IntegerOverflow(&'static str),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("ideal is not homogeneous under any positive grading")]
    NotHomogeneous,

    #[error("no strictly positive grading exists in the row space")]
    NoPositiveGrading,

    #[error("{what} budget of {limit} exhausted")]
    BudgetExhausted { what: &'static str, limit: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("not rescalable: {0}")]
    NotRescalable(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExhausted { .. })
    }
}
