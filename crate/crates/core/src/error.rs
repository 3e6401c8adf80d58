use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A computation was refused because it exceeds the configured budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("cone has a nontrivial lineality space: {0}")]
    Lineality(String),

    /// Two independent routes disagreed. Signals a bug or an insufficient cap.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
