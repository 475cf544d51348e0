use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    /// The instance is too large for brute-force closure.
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("enumeration budget of {budget} evaluations exceeded")]
    BudgetExceeded { budget: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
