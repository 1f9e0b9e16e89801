use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order out of range: m = {m}, uniformity = {k}")]
    OrderOutOfRange { m: usize, k: usize },

    #[error("certificate references an edge not in the hypergraph: {0}")]
    InvalidCertificateReference(String),

    #[error("malformed cover: {0}")]
    MalformedCover(String),

    #[error("size limit exceeded: {what} ({actual} > {limit})")]
    SizeLimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("malformed hypergraph: {0}")]
    MalformedHypergraph(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("malformed problem: {0}")]
    MalformedProblem(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("structure error: {0}")]
    Structure(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("assertion failure: {0}")]
    AssertionFailure(String),

    #[error("bound violated: {0}")]
    BoundViolated(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
