use crate::graph::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("out-weights of node {0} sum to zero and cannot be normalized")]
    ZeroWeightSum(NodeId),

    #[error("out-weights of node {node} sum to {sum}, expected 1")]
    NotNormalized { node: NodeId, sum: f64 },

    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(String),

    #[error("no energy was deposited")]
    EmptyField,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
