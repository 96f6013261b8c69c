use thiserror::Error;

/// Errors shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-contract input.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A text file could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The instance exceeds what an exact oracle is configured to handle.
    #[error("instance of size {size} exceeds the configured bound {bound}")]
    Capacity { size: usize, bound: usize },

    /// The search ran out of time. `best_upper_bound` is a verified
    /// upper bound found by a greedy pass, when one is available.
    #[error("search timed out (best verified upper bound: {})", fmt_bound(.best_upper_bound))]
    Timeout { best_upper_bound: Option<usize> },

    /// An internal consistency check failed. Never expected to fire.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

fn fmt_bound(b: &Option<usize>) -> String {
    match b {
        Some(k) => k.to_string(),
        None => "none".to_string(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
