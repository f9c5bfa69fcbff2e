use thiserror::Error;

/// Error type shared by every module of the engine.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Caller violated a documented precondition (empty input, wrong variable, ...).
    #[error("usage error: {0}")]
    Usage(String),
    /// A parameter or index is outside the domain a formula is valid on.
    #[error("domain error: {0}")]
    Domain(String),
    /// An identity the construction relies on failed to hold exactly.
    #[error("invariant violation: {0}")]
    Invariant(String),
    /// Seed solutions were linearly dependent (vanishing Wronskian).
    #[error("degeneracy: {0}")]
    Degeneracy(String),
    /// Numeric evaluation hit a pole.
    #[error("pole: {0}")]
    Pole(String),
    /// Numeric routine failed to reach the requested accuracy.
    #[error("accuracy: {0} (estimate {1:e})")]
    Accuracy(String, f64),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
