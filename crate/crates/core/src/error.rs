use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex `{0}` is not declared")]
    VertexNotFound(String),
    #[error("vertex `{0}` is declared more than once")]
    DuplicateVertex(String),
    #[error("part `{0}` is declared more than once")]
    DuplicatePartName(String),
    #[error("part `{0}` is empty")]
    EmptyPart(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("bound {0} is outside the supported range")]
    UnsupportedBound(usize),
    #[error("excluded vertex `{0}` equals an endpoint of the query")]
    InvalidExclusion(String),
    #[error("`{0}` was given for both vertices of a pair query")]
    SameVertex(String),
    #[error("no arc between `{0}` and `{1}`, which lie in different parts")]
    MissingCrossArc(String, String),
    #[error("both orientations present between `{0}` and `{1}`")]
    DoubleOrientation(String, String),
    #[error("arc between `{0}` and `{1}`, which lie in the same part")]
    IntraPartArc(String, String),
    #[error("a multipartite tournament needs at least 3 parts, got {0}")]
    TooFewParts(usize),
    #[error("enumeration over {0} cross pairs exceeds the 2^20 cap")]
    EnumerationTooLarge(usize),
    #[error("graph and tournament are on different vertex sets")]
    VertexSetMismatch,
    #[error("the tournament is not loose")]
    NotLoose,
    #[error("instance with {0} vertices exceeds the exact-search cap")]
    InstanceTooLarge(usize),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("invalid fuzz configuration: {0}")]
    ConfigError(String),
    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
