use crate::hypergraph::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("edge index {index} out of range ({count} edges)")]
    EdgeIndex { index: usize, count: usize },

    #[error("at least {needed} edges required, hypergraph has {found}")]
    TooFewEdges { needed: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex set contains every vertex of part {part}")]
    PartExhausted { part: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypergraph is invalid: {} violation(s), first: {}", .0.len(), .0[0])]
    InvalidHypergraph(Vec<Violation>),

    #[error("step budget exhausted")]
    BudgetExhausted,

    #[error("certificate from {0} failed full-scan validation")]
    CertificateRejected(String),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}
