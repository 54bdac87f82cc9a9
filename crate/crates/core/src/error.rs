use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("group order {order} exceeds the supported bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },
    #[error("unknown group label `{0}`")]
    UnknownGroup(String),
    #[error("invalid gain graph: {0}")]
    InvalidGraph(String),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("element {element} is outside a ground set of size {size}")]
    ForeignElement { element: usize, size: usize },
    #[error("{what} has size {size}, above the supported bound {bound}")]
    TooLarge { what: &'static str, size: usize, bound: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("detection method `{method}` does not apply: {reason}")]
    DetectionMismatch { method: String, reason: String },
    #[error("search budget of {seconds} s exhausted")]
    BudgetExhausted { seconds: u64 },
    #[error("claim failed: {0}")]
    ClaimFailed(String),
    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
