use thiserror::Error;

/// Errors surfaced by the library. The CLI maps these onto exit codes.
#[derive(Error, Debug)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unknown graph family: {0}")]
    UnknownFamily(String),

    #[error(
        "guard exceeded: {what} has size {size}, limit {limit} (override with --max-vertices)"
    )]
    Guard {
        what: String,
        size: usize,
        limit: usize,
    },

    #[error("solver failure: {0}")]
    Solver(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn guard(what: impl Into<String>, size: usize, limit: usize) -> Self {
        Error::Guard {
            what: what.into(),
            size,
            limit,
        }
    }
}
