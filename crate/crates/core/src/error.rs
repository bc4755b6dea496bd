use std::path::PathBuf;

use thiserror::Error;

use crate::Pair;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} elements, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("element index {index} out of range for {n} elements")]
    OutOfRange { index: usize, n: usize },

    #[error("diagonal pair ({0}, {0}) is not a variable")]
    Diagonal(usize),

    #[error("value for pair {0:?} is not finite")]
    NonFinite(Pair),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("partial assignment is inconsistent: pair {0:?} is forced to both 0 and 1")]
    Inconsistent(Pair),

    #[error("pair {0:?} is already decided")]
    AlreadyDecided(Pair),

    #[error("{n} elements is too many for exhaustive enumeration (limit {limit})")]
    TooLarge { n: usize, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown node id `{0}` in edge list")]
    UnknownNode(String),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("duplicate entry for pair {pair:?} at {path}:{line}")]
    DuplicatePair {
        path: PathBuf,
        line: usize,
        pair: Pair,
    },

    #[error("soundness violation: {0}")]
    Soundness(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
