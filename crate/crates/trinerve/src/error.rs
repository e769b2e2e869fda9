use thiserror::Error;

/// Errors shared by every module of the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A value violates a structural invariant (bad table, dimension
    /// mismatch, ill-typed pasting scheme, ...).
    #[error("structural error: {0}")]
    Structure(String),

    /// An enumeration would exceed the configured size budget.
    #[error("size budget exceeded in dimension {dim}: {needed} simplices > budget {budget}")]
    Budget {
        dim: usize,
        needed: usize,
        budget: usize,
    },

    /// A requested value lies outside the range where the answer is exact.
    #[error("degree {degree} out of valid range (max {max})")]
    DegreeRange { degree: usize, max: usize },

    /// Enumeration of an infinite object was requested.
    #[error("infinite: {0}")]
    Infinite(String),

    /// A verification precondition failed, with a witness.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
