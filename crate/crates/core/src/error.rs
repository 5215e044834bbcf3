use thiserror::Error;

/// Errors raised by the analysis and geometry routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The geometric configuration makes the requested quantity undefined.
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    /// The mirror embedding of X^4 - rX - 1 does not exist for this r.
    #[error("embedding degenerate: {0}")]
    EmbeddingDegenerate(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable name used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DomainError",
            Error::DegenerateConfiguration(_) => "DegenerateConfiguration",
            Error::InvalidScenario(_) => "InvalidScenario",
            Error::EmbeddingDegenerate(_) => "EmbeddingDegenerate",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
