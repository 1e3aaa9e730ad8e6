use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),

    #[error("self-loop at `{0}`")]
    SelfLoop(String),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),

    #[error("not a path of the graph: {0}")]
    NotAPath(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not subcubic (max degree {0})")]
    NotSubcubic(usize),

    #[error("graph is subcubic; expected a vertex of degree at least 4")]
    Subcubic,

    #[error("not a pan cycle: {0}")]
    NotPanCycle(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("not a covering family: {0}")]
    NotCovering(String),

    #[error("covering family is not bull-free: path ends {0}-{1} form a bull pair")]
    NotBullFree(String, String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("the high-degree set is empty")]
    EmptyHighSet,

    #[error("duplicate terminal pair {0}-{1}")]
    DuplicatePair(String, String),

    #[error("edge count {edges} exceeds the cap {cap}")]
    CapExceeded { edges: usize, cap: usize },

    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("witness construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
