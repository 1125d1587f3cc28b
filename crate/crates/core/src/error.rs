use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("bad CSR container: {0}")]
    Format(String),

    #[error("vertex id space overflow: {0}")]
    Overflow(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("labeling does not belong to this graph: {0}")]
    LabelingMismatch(String),

    #[error("algorithm {0} has no {1} form")]
    UnsupportedAlgorithm(String, &'static str),

    #[error("unknown algorithm id `{0}`")]
    UnknownAlgorithm(String),
}
