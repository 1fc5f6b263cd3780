use thiserror::Error;

use crate::check::Check;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular (rank {rank} of {size})")]
    Singular { rank: usize, size: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error("malformed fusion data: {0}")]
    MalformedFusion(String),
    #[error("not modular: {0}")]
    NotModular(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("character table is degenerate: {0}")]
    NotNondegenerate(String),
    #[error("validation failed: {}", summarize(.0))]
    Invalid(Vec<Check>),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("not ribbon-consistent: {0}")]
    NotRibbonConsistent(String),
    #[error("unavailable: {0}")]
    Capability(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCategory(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("unsupported schema_version {found} (expected 1)")]
    SchemaVersion { found: u64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn summarize(checks: &[Check]) -> String {
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| c.is_fail())
        .map(|c| c.id.as_str())
        .collect();
    failed.join(", ")
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    pub(crate) fn needs_modular(what: &str) -> Self {
        Error::Capability(format!("{what} requires an S-matrix (modular input)"))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
