use thiserror::Error;

pub type Result<T> = std::result::Result<T, BoundError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("interval endpoints must be finite (a = {a}, b = {b})")]
    NonFiniteEndpoint { a: f64, b: f64 },

    #[error("interval is empty: a = {a} is not below b = {b}")]
    EmptyInterval { a: f64, b: f64 },

    #[error("lower endpoint a = {0} is not negative")]
    LowerNotNegative(f64),

    #[error("upper endpoint b = {0} is not positive")]
    UpperNotPositive(f64),

    #[error("interval width b - a overflows (a = {a}, b = {b})")]
    WidthOverflow { a: f64, b: f64 },

    #[error("{name} = {value} is invalid: {reason}")]
    InvalidArgument {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("no intervals")]
    EmptySet,

    #[error("{what}: expected {expected} entries, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("{0} overflows a 64-bit float; use the log-space variant")]
    Overflow(&'static str),

    #[error("row {row}: {message}")]
    Parse { row: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl BoundError {
    pub(crate) fn invalid(name: &'static str, value: f64, reason: &'static str) -> Self {
        BoundError::InvalidArgument {
            name,
            value,
            reason,
        }
    }

    /// True for errors caused by bad input rather than numeric failure.
    pub fn is_usage(&self) -> bool {
        !matches!(self, BoundError::Overflow(_))
    }
}

impl From<std::io::Error> for BoundError {
    fn from(err: std::io::Error) -> Self {
        BoundError::Io(err.to_string())
    }
}
