use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("order {0} exceeds the 64-vertex limit")]
    TooManyVertices(usize),

    #[error("{0} edges exceed the 64-edge limit for a materialized line graph")]
    TooManyEdges(usize),

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("closure level {level} exceeds the {available} available elements")]
    LevelTooLarge { level: usize, available: usize },

    #[error("closure level must be positive")]
    ZeroLevel,

    #[error("invalid graph family: {0}")]
    InvalidFamily(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("finite field: {0}")]
    Field(String),

    #[error("hypergraph: {0}")]
    Hypergraph(String),

    #[error("hypergraph parse error on line {line}: {reason}")]
    HypergraphParse { line: usize, reason: String },

    #[error("line {line}: {source}")]
    Stream {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("unknown search `{0}` (expected planar-2lec, min-2ec or nine-edge-2lec)")]
    UnknownSearch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
