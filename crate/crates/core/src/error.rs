//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A structural precondition was violated (lengths, bounds, indices).
    #[error("structural error: {0}")]
    Structural(String),

    /// A size limit that protects memory/runtime was exceeded.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// Operand dimensions do not match.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// The requested problem is not defined for this graph.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// Graph generator parameters are infeasible.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Malformed input file.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown gate set {0:?} (expected cliffordt | rotcnot | tinyh | tiny)")]
    UnknownGateSet(String),

    #[error("unknown problem {0:?} (expected maxcut | minvec | maxind | maxcli)")]
    UnknownProblem(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}
