use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position} in {input:?}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("invalid Cartan type {family}{rank}: {reason}")]
    InvalidType {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("node index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight is not dominant: coordinate {coordinate} is {value}")]
    NotDominant { coordinate: usize, value: i64 },

    #[error("weight is not strictly dominant: coordinate {coordinate} is {value}")]
    NotStrictlyDominant { coordinate: usize, value: i64 },

    #[error("unknown Weyl group element {0:?}")]
    UnknownElement(String),

    #[error("{guard} guard exceeded: requested {requested}, limit {limit}")]
    GuardExceeded {
        guard: &'static str,
        requested: u128,
        limit: u128,
    },

    /// The mathematical hypothesis of the requested computation is not met
    /// (rank-one factors, low dimension, exceptional rank-two factors).
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    /// An internal identity failed to hold. Always a bug.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Refusals are mathematical inapplicability, unmet preconditions or
    /// guard limits, as opposed to malformed input or internal failures.
    pub fn is_refusal(&self) -> bool {
        !matches!(
            self,
            Error::Parse { .. } | Error::InvalidType { .. } | Error::Inconsistent(_)
        )
    }

    /// Process exit status: 1 for malformed input, 2 for refusals, 3 for
    /// internal consistency failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidType { .. } => 1,
            Error::Inconsistent(_) => 3,
            _ => 2,
        }
    }

    pub(crate) fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}
