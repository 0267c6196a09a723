use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("elements or subsets belong to different groups")]
    GroupMismatch,

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid field polynomial: {0}")]
    InvalidField(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("difference set is not McFarland shaped: {0}")]
    NotMcFarlandShaped(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("lemma violation: {0}")]
    LemmaViolation(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
