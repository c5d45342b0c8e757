use thiserror::Error;

/// Errors produced across the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {n} exceeds the brute-force bound {max}")]
    DegreeTooLarge { n: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("generator subset is not invariant under s_{k}")]
    NotInvariant { k: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A budgeted or incomplete oracle could not decide.
    #[error("undecided: {0}")]
    Unknown(String),

    /// A returned decomposition failed its own multiplication check.
    #[error("internal self-check failed: {0}")]
    SelfCheck(String),

    #[error("search budget exceeded after {0} nodes")]
    BudgetExceeded(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
