use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("empty set: the union has measure zero")]
    EmptySet,

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("no roots defined for a constant or zero polynomial")]
    NoRoots,

    #[error("evaluation error at t = {t} (piece {piece}): {message}")]
    Eval {
        t: f64,
        piece: usize,
        message: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("calibration failed: {0}")]
    Calibration(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
