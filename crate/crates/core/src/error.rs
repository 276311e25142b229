use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration would exceed its cap. `required` is the size it would
    /// need, saturating at `u128::MAX`.
    #[error("{what} exceeds the budget of {budget}")]
    BudgetExceeded {
        what: String,
        required: u128,
        budget: u128,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn budget(what: impl Into<String>, required: u128, budget: u128) -> Self {
        Error::BudgetExceeded {
            what: what.into(),
            required,
            budget,
        }
    }
}
