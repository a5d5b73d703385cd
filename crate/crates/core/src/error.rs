use thiserror::Error;

/// Location inside a spec or literal, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for Position {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: Position, message: String },

    #[error("unknown group family `{family}` at {position}")]
    UnknownFamily { family: String, position: Position },

    #[error("group order {order} exceeds the cap of {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("generator {index} is not a permutation of 1..={degree}")]
    NotAPermutation { index: usize, degree: usize },

    #[error("element id {id} out of range for a group of order {order}")]
    ElementOutOfRange { id: usize, order: usize },

    #[error("set universe {found} does not match group order {expected}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("operation requires a nonempty set")]
    EmptySet,

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subgroup list is not a complete, sorted subgroup list: {0}")]
    IncompleteSubgroupList(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("classification does not match the set: {0}")]
    WitnessMismatch(String),

    #[error("census cap exceeded: group order {order} > {cap} ({hint})")]
    CensusCap {
        order: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
