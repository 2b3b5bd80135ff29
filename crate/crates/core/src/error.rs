use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Exhaustive enumeration would visit more elements than allowed.
    #[error("enumeration of {required} elements exceeds the budget of {budget} (raise it with an explicit override)")]
    BudgetExceeded { required: BigUint, budget: u64 },

    /// An exact evaluation produced something the formula says is impossible
    /// (for example a non-integer count).
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
