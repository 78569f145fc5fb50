use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at row {row}, column {column:?}: {message}")]
    Parse {
        row: usize,
        column: Option<String>,
        message: String,
    },

    #[error("no objects")]
    NoObjects,

    #[error("duplicate object id {0:?}")]
    DuplicateObject(String),

    #[error("unknown attribute {0:?}")]
    UnknownAttribute(String),

    #[error("unknown element {0:?}")]
    UnknownElement(String),

    #[error("empty granule")]
    EmptyGranule,

    #[error("duplicate granule {0:?}")]
    DuplicateGranule(Vec<String>),

    #[error("regions over different universes (sizes {0} and {1})")]
    UniverseMismatch(usize, usize),

    #[error("relation is not symmetric: ({0}, {1}) present but ({1}, {0}) missing")]
    NotSymmetric(usize, usize),

    #[error("relation is not irreflexive at {0}")]
    NotIrreflexive(usize),

    #[error("not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("{what} of size {size} exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
