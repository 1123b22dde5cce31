use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph has {n} vertices, supported limit is {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("invalid family specifier: {0}")]
    Family(String),

    #[error("invalid coloring: {0}")]
    Coloring(String),

    #[error("invalid constraint set: {0}")]
    Constraint(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search budget exhausted: {0}")]
    Budget(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
