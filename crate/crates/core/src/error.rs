use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed structured input: {0}")]
    Structured(String),

    #[error("{0}")]
    InvalidGraph(String),

    #[error("invalid cycle witness: {0}")]
    InvalidWitness(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("too large for exact {what}: {detail}")]
    TooLarge { what: &'static str, detail: String },

    #[error("hypotheses not satisfied: {0}")]
    HypothesesNotSatisfied(String),

    #[error("box outside theorem hypotheses: {0}")]
    OutsideHypotheses(String),

    #[error("unknown predicate: {0}")]
    UnknownPredicate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
