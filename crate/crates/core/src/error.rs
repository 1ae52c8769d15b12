use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unit index {0} out of range 0..6")]
    UnitIndex(usize),

    #[error("zero has no primality verdict")]
    ZeroInput,

    #[error("{what} = {value} exceeds the supported scale (limit {limit})")]
    Scale {
        what: &'static str,
        value: String,
        limit: String,
    },

    #[error("expected between {min} and {max} factors, got {got}")]
    Arity { min: usize, max: usize, got: usize },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("not a solution: {0}")]
    NotASolution(String),

    #[error("fixture {path}: {reason}")]
    Fixture { path: PathBuf, reason: String },

    #[error("checkpoint {path}: {reason}")]
    Checkpoint { path: PathBuf, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
