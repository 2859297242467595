use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Input violates a structural precondition (asymmetry, indefiniteness,
    /// non-squarefree d, rank mismatch, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// The operation is not defined for this input (e.g. Euclidean division
    /// in a non-Euclidean field).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Division by zero in field arithmetic.
    #[error("division by zero")]
    DivisionByZero,

    /// Requested catalog entry does not exist.
    #[error("unknown catalog entry {name:?}; available: {available}")]
    UnknownCatalog { name: String, available: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
