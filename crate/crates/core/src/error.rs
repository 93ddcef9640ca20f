use crate::graph::VertexId;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge: self-loop at vertex {0}")]
    InvalidEdge(VertexId),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("inconsistent state: {0}")]
    InconsistentState(String),

    #[error("table {0} is not enabled")]
    TableDisabled(&'static str),

    #[error("pattern {0} is not enabled")]
    PatternDisabled(&'static str),

    #[error("count does not fit the configured count type")]
    Overflow,

    #[error("count evaluated to a negative value ({0})")]
    NegativeResult(i128),

    #[error("graph has {found} vertices, oracle limit is {limit}")]
    SizeLimit { found: usize, limit: usize },

    #[error("unsupported reduction: {0}")]
    UnsupportedProblem(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("oracle mismatch at step {step} ({query}): engine {engine}, oracle {oracle}")]
    OracleMismatch {
        step: usize,
        query: String,
        engine: u128,
        oracle: u128,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
