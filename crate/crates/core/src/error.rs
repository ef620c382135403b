use thiserror::Error;

use crate::lattice::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,
    #[error("edge {0}-{1} does not join rook-adjacent vertices")]
    NotLatticeEdge(Vertex, Vertex),
    #[error("edge endpoint {0} is not a vertex of the graph")]
    MissingEndpoint(Vertex),
    #[error("vertex not in graph: {0}")]
    VertexNotInGraph(Vertex),
    #[error("requires simple grid graph")]
    NotSimple,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0} and {1} lie in different components")]
    DifferentComponents(Vertex, Vertex),
    #[error("walk cannot terminate: no absorbing state is reachable from {0}")]
    CannotTerminate(Vertex),
    #[error("start vertex {0} is absorbing")]
    StartAbsorbing(Vertex),
    #[error("target {0} is not an absorbing state")]
    TargetNotAbsorbing(Vertex),
    #[error("{0} is in the top-left boundary")]
    TopLeftBoundary(Vertex),
    #[error("parameter {name} must be at least {min}, got {got}")]
    TooSmall {
        name: &'static str,
        min: i64,
        got: i64,
    },
    #[error("no samples")]
    NoSamples,
    #[error("district {0} disconnected")]
    DistrictDisconnected(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot serialize: {0}")]
    Unrepresentable(String),
    #[error("linear system is singular")]
    Singular,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
