use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed input at a 1-based line.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A value violates a domain invariant.
    #[error("invalid {what}: {message}")]
    Invalid { what: &'static str, message: String },

    /// A profile is internally inconsistent or names an unknown axis code.
    #[error("profile error ({axis}): {message}")]
    Profile { axis: &'static str, message: String },

    /// Pipeline configuration does not fit the requested operation.
    #[error("configuration error: {0}")]
    Config(String),

    #[error("self-pair: concept {0} cannot be paired with itself")]
    SelfPair(String),

    #[error("conflicting annotations in document {doc_id} for pair ({id1}, {id2}): {first} vs {second}")]
    Conflict {
        doc_id: String,
        id1: String,
        id2: String,
        first: String,
        second: String,
    },

    #[error("duplicate {what}: {key}")]
    Duplicate { what: &'static str, key: String },

    #[error("argument out of range: {0}")]
    Range(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(what: &'static str, message: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            message: message.into(),
        }
    }
}
