use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An interval handed to a refinement routine does not isolate a root.
    #[error("interval [{lower}, {upper}] does not isolate a root")]
    NotIsolating { lower: String, upper: String },
    /// A permutation failed the proper-alternating checks.
    #[error("not a proper alternating permutation: {0}")]
    NotPap(String),
    /// An iterative search ran out of its evaluation budget.
    #[error("budget exhausted after {evaluations} evaluations: {context}")]
    BudgetExhausted { evaluations: usize, context: String },
    /// A numerical iteration failed to converge.
    #[error("no convergence: {0}")]
    NoConvergence(String),
    /// A rational literal could not be parsed.
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
