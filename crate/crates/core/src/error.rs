use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),

    /// A documented precondition of an operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("V_{sequence}-sequence is starved: needs {needed} vertices, has {available}")]
    Capacity {
        sequence: usize,
        needed: usize,
        available: usize,
    },

    #[error("graph has {vertices} vertices, exceeding the limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },

    #[error("search budget exceeded after {explored} embeddings")]
    BudgetExceeded { explored: u64 },
}

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}
