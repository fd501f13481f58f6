use thiserror::Error;

use crate::graph::EopSolution;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge id {0} does not belong to the graph")]
    UnknownEdge(usize),

    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("graph is not a {0} graph")]
    NotInClass(&'static str),

    /// The exhaustive search ran out of budget; `best` is the best set found so far.
    #[error("search budget exceeded ({reason}); best value so far {}", best.value)]
    BudgetExceeded { reason: String, best: EopSolution },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
