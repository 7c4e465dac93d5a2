use thiserror::Error;

/// A literal (word, element, permutation, matrix) that failed to parse.
///
/// `position` is a byte offset into the input string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    /// A suite or character-data file entry that could not be used.
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("the identity word lies in every level; it has no minimal level")]
    IdentityHasNoLevel,

    #[error("resource cap exceeded while building {what}: {count} > {cap}{}", radius.map(|r| format!(" (radius {r})")).unwrap_or_default())]
    Resource {
        what: &'static str,
        count: usize,
        cap: usize,
        radius: Option<usize>,
    },

    #[error("generator multiset is not closed under inversion")]
    NotSymmetric,

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("generator {0} has a nonzero shift; only elements of the free factor are allowed")]
    NonzeroShift(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("characters live on different groups")]
    GroupMismatch,

    #[error("subgroup containment violated: {0}")]
    NotNested(String),

    #[error("expected an integer multiplicity, got {re}{im:+}i")]
    NonIntegral { re: f64, im: f64 },

    #[error("group axiom violated: {0}")]
    Axiom(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
