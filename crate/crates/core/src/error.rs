use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {order} exceeds the limit of {limit} vertices")]
    OrderLimit { order: usize, limit: usize },

    #[error("{engine} engine supports at most {limit} vertices, got {order}")]
    EngineLimit { engine: &'static str, order: usize, limit: usize },

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("cannot parse family spec {spec:?}: {reason}")]
    FamilySpec { spec: String, reason: String },

    #[error("graph is not bicyclic: {0}")]
    NotBicyclic(String),

    #[error("unknown claim {0:?}")]
    UnknownClaim(String),

    #[error("{claim} has no closed-form bound")]
    NoClosedForm { claim: &'static str },

    #[error("{claim} is unverifiable at n = {n}: {reason}")]
    Unverifiable { claim: &'static str, n: usize, reason: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
