use thiserror::Error;

use crate::search::Exhausted;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph with {order} vertices")]
    UnknownVertex { vertex: usize, order: usize },

    #[error("edge {edge} is out of range for a graph with {size} edges")]
    UnknownEdge { edge: usize, size: usize },

    #[error("edge {edge} is a loop at vertex {vertex}; graphs must be loopless")]
    Loop { edge: usize, vertex: usize },

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no edges")]
    Edgeless,

    #[error("iterated line graph became edgeless at level {level}")]
    EdgelessAtLevel { level: usize },

    #[error("line graph at level {level} would have {vertices} vertices, above the cap of {cap}")]
    CapExceeded {
        level: usize,
        vertices: usize,
        cap: usize,
    },

    #[error("parse error at line {line}, byte {byte}: {message}")]
    Parse {
        line: usize,
        byte: usize,
        message: String,
    },

    #[error("graph6 encodes simple graphs only; edge {edge} is parallel to an earlier edge")]
    NotSimple { edge: usize },

    #[error("invalid subgraph: {0}")]
    InvalidSubgraph(String),

    #[error("invalid trail: {0}")]
    InvalidTrail(String),

    #[error("trail does not dominate edge {edge}")]
    NotDominating { edge: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("a path has no hamiltonian index")]
    PathHasNoIndex,

    #[error("{0}")]
    Budget(Exhausted),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl From<Exhausted> for Error {
    fn from(e: Exhausted) -> Self {
        Error::Budget(e)
    }
}

impl Error {
    pub(crate) fn parse(line: usize, byte: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            byte,
            message: message.into(),
        }
    }
}
