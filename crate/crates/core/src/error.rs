//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input data (bad field, bad presentation,
    /// an action that does not respect the defining relations, ...).
    #[error("input error: {0}")]
    Input(String),

    /// A mathematical operation failed (singular matrix, lifting problem
    /// with no solution, ...).
    #[error("{0}")]
    Math(String),

    /// I/O or serialization failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
