use ramify_core::Error as CoreError;

/// Failures of the document pipeline, each with its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("internal invariant breach: {0}")]
    Internal(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Io(_) => 1,
            RunError::Schema(_) => 2,
            RunError::Validation(_) => 3,
            RunError::Internal(_) => 4,
        }
    }

    /// Prefixes the message with the location in the document.
    pub fn at(self, context: &str) -> RunError {
        match self {
            RunError::Schema(m) => RunError::Schema(format!("{context}: {m}")),
            RunError::Validation(m) => RunError::Validation(format!("{context}: {m}")),
            RunError::Internal(m) => RunError::Internal(format!("{context}: {m}")),
            RunError::Io(e) => RunError::Io(e),
        }
    }
}

impl From<CoreError> for RunError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::DimensionMismatch { .. } | CoreError::InvalidScalar(_) | CoreError::InvalidField(_) => {
                RunError::Schema(e.to_string())
            }
            CoreError::InvariantBreach(_) => RunError::Internal(e.to_string()),
            _ => RunError::Validation(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for RunError {
    fn from(e: serde_json::Error) -> Self {
        RunError::Schema(e.to_string())
    }
}
