use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("usage error: {0}")]
    Usage(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("elements belong to different algebras ({0} vs {1})")]
    PresentationMismatch(String, String),
    #[error("truncation overflow: result reaches depth {needed} but the module is truncated at {depth}")]
    TruncationOverflow { needed: usize, depth: usize },
    #[error("resource guard exceeded: {0}")]
    ResourceGuard(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
