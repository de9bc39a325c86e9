use thiserror::Error;

/// Errors raised by the arithmetic, geometry and corpus engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    /// The shortest-term search ran out of room before finding a decomposition.
    #[error("bounds exceeded: no decomposition of {value} within {bound} = {limit}")]
    BoundsExceeded {
        value: String,
        bound: &'static str,
        limit: u64,
    },

    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: String },

    #[error("{what} must not be negative, got {value}")]
    Negative { what: &'static str, value: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("sides {0}, {1}, {2} do not form a proper triangle")]
    NotATriangle(String, String, String),

    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("polygon is not simple: edges {0} and {1} intersect")]
    SelfIntersecting(usize, usize),

    #[error("problem {id:?}, field {field:?}: {reason}")]
    Corpus {
        id: String,
        field: String,
        reason: String,
    },

    #[error("2/{n}: {source}")]
    TableRow { n: u64, source: Box<Error> },

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }

    pub(crate) fn corpus(id: &str, field: &str, reason: impl Into<String>) -> Self {
        Error::Corpus {
            id: id.to_string(),
            field: field.to_string(),
            reason: reason.into(),
        }
    }
}
