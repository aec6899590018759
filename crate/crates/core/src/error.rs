use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("linear system has no solution")]
    NoSolution,

    #[error("matrix is not group invertible (rank(a^2) < rank(a))")]
    NotGroupInvertible,

    #[error("no (b,c)-inverse: {0}")]
    NotBcInvertible(String),

    #[error("no {{2}}-inverse with the prescribed image and kernel: {0}")]
    NotTwoInvertible(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("inconsistent system: {0}")]
    Inconsistent(String),

    /// A post-condition that the mathematics guarantees did not hold.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn dim_err(msg: impl Into<String>) -> Error {
    Error::Dimension(msg.into())
}
