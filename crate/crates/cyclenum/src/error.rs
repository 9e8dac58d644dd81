use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Clone, Debug, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Operands have incompatible dimensions or truncation boxes.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// An exhaustive enumeration would exceed the configured stream budget.
    #[error("enumeration budget exceeded: stream length {needed} > budget {budget}")]
    Budget { needed: u128, budget: u64 },

    /// A string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// An invariant the implementation guarantees was violated.
    #[error("internal consistency error: {0}")]
    Internal(String),

    /// Two independent computation routes produced different values.
    #[error("computation routes disagree: {0}")]
    Disagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
