use std::fmt;

use crate::chain::Fundamental;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failure to read series, monomial or window text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Character offset of the offending token.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: expected {}, found {}", self.position, self.expected, self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Domain(String),
    #[error("division by the zero series")]
    DivisionByZero,
    #[error("no logarithmic derivative is defined for index {0}")]
    SchemaDomain(Fundamental),
    #[error("malformed window: {0}")]
    Window(String),
    #[error("leading monomial is asymptotic to the g.l.b. of the logarithmic derivatives")]
    NoAsymptoticIntegral,
    #[error("search exhausted after {depth} probes: {what}")]
    SearchExhausted { what: String, depth: usize },
    #[error("refinement step did not lower the leading monomial of the residual")]
    NoDescent,
    #[error("invalid schema: {0}")]
    InvalidSchema(String),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
}

impl Error {
    /// Stable name of the error class, printed by the command-line tool.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DomainError",
            Error::DivisionByZero => "DivisionByZero",
            Error::SchemaDomain(_) => "SchemaDomainError",
            Error::Window(_) => "WindowError",
            Error::NoAsymptoticIntegral => "NoAsymptoticIntegral",
            Error::SearchExhausted { .. } => "SearchExhausted",
            Error::NoDescent => "NoDescent",
            Error::InvalidSchema(_) => "InvalidSchema",
            Error::InvalidChain(_) => "InvalidChain",
            Error::Config(_) => "ConfigError",
            Error::Parse(_) => "ParseError",
        }
    }

    /// Parse and configuration failures, as opposed to mathematical domain errors.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Config(_) | Error::InvalidSchema(_) | Error::InvalidChain(_))
    }
}
