use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph6 input; `offset` is the byte position inside the string.
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    /// Malformed edge-list input; `line` is 1-based.
    #[error("edge list parse error at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    /// Input outside the operation's domain (disconnected graph, out-of-range
    /// parameter, ...).
    #[error("{0}")]
    Domain(String),

    /// A guarded computation refused to run; `estimate` says what it would cost.
    #[error("refused: {what} ({estimate})")]
    Guard { what: String, estimate: String },

    /// Two routes that must agree disagreed. Always a bug, never user error.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("invalid usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
