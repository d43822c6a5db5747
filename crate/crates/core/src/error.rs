use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid path witness: {0}")]
    InvalidWitness(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("not a tree: {0}")]
    NotTree(String),

    #[error("not a {k}-tree: {reason}")]
    NotKTree { k: usize, reason: String },

    #[error("tree-width exceeds 2: {0}")]
    TreewidthTooLarge(String),

    #[error("not outerplanar: {0}")]
    NotOuterplanar(String),

    #[error("not a bracelet: {0}")]
    NotBracelet(String),

    #[error("invalid interval representation: {0}")]
    InvalidIntervals(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A construction step produced something its own invariants reject.
    #[error("certificate check failed: {0}")]
    Certificate(String),

    #[error("instance too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
