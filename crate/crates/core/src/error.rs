use thiserror::Error;

use crate::graph::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter outside the domain of a generator, formula or range.
    #[error("domain error: {0}")]
    Domain(String),

    /// A vertex id or label that does not belong to the graph.
    #[error("input error: {0}")]
    Input(String),

    /// A request that combines incompatible options.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    Invalid(#[from] Violation),
}
