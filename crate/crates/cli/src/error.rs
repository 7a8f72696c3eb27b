use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or inconsistent input; exit code 2.
    #[error("{0}")]
    Input(String),
    /// Work cap reached before a decision; exit code 3.
    #[error("capacity exceeded: explored {explored} of at most {limit} pattern solves without a decision")]
    Capacity { explored: u64, limit: u64, partial: Option<Value> },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Capacity { .. } => 3,
        }
    }

    /// Attaches the sections computed before the cap was hit.
    pub fn with_partial(self, partial: Value) -> Self {
        match self {
            CliError::Capacity { explored, limit, .. } => CliError::Capacity { explored, limit, partial: Some(partial) },
            other => other,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CliError::Input(_) => json!({ "error": self.to_string(), "exit_code": self.exit_code() }),
            CliError::Capacity { explored, limit, partial } => json!({
                "error": self.to_string(),
                "exit_code": self.exit_code(),
                "explored": explored,
                "limit": limit,
                "partial": partial,
            }),
        }
    }
}

impl From<coorth::Error> for CliError {
    fn from(e: coorth::Error) -> Self {
        match e {
            coorth::Error::Capacity { explored, limit } => CliError::Capacity { explored, limit, partial: None },
            other => CliError::Input(other.to_string()),
        }
    }
}
