use thiserror::Error;

use crate::report::AxiomReport;

/// Errors raised by constructors, builders and the document layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("expected a module of flavor {expected}, found {found}")]
    FlavorMismatch { expected: String, found: String },

    #[error("module of flavor {flavor} is missing its {side} action family")]
    MissingAction { flavor: String, side: &'static str },

    #[error("{what} fails its axioms ({} violations)", report.len())]
    NotVerified { what: String, report: AxiomReport },

    #[error("hypothesis `{hypothesis}` fails at element {witness}")]
    HypothesisUnmet { hypothesis: String, witness: usize },

    #[error("scalar must be nonzero")]
    ZeroScalar,

    #[error("degree {degree} lies outside the window 0..{max}")]
    DegreeOutOfWindow { degree: usize, max: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
