use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A structure failed one of its defining axioms; the message pins the
    /// first witness (element names, the axiom instance, both sides).
    #[error("axiom violated: {0}")]
    Axiom(String),

    /// Input data is malformed or out of range for the requested operation.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A relation cannot be oriented into a rewrite rule because its leading
    /// coefficient is not an invertible scalar.
    #[error("non-unit leading coefficient in relation `{0}`")]
    NonUnitLeading(String),

    /// Completion hit the degree cap before resolving all overlaps, and the
    /// caller required full confluence.
    #[error("completion exceeded degree cap {cap}: {detail}")]
    DegreeCap { cap: u32, detail: String },

    /// A verification routine ran to completion and the claim it checks is
    /// false; the message carries a finite counterexample.
    #[error("verification failed: {0}")]
    Verify(String),

    /// Parsing of a textual or JSON interchange format failed.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
