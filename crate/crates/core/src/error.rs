use thiserror::Error;

/// Violations of the structural invariants of temporal and static graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range (graph has {n_vertices} vertices)")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },
    #[error("empty interval ({start},{finish}): start must be smaller than finish")]
    EmptyInterval { start: u32, finish: u32 },
    #[error("interval ({start},{finish}) outside [0,{lifetime}]")]
    IntervalOutOfRange { start: u32, finish: u32, lifetime: u32 },
    #[error("intervals ({0},{1}) and ({2},{3}) on one edge overlap")]
    OverlappingIntervals(u32, u32, u32, u32),
    #[error("edge must carry at least one interval")]
    NoIntervals,
    #[error("duplicate edge between vertices {0} and {1}")]
    DuplicateEdge(usize, usize),
    #[error("negative weight")]
    NegativeWeight,
    #[error("weight is not finite")]
    NonFiniteWeight,
    #[error("{got} vertex weights for {expected} vertices")]
    WeightCountMismatch { expected: usize, got: usize },
    #[error("unknown edge id {0}")]
    UnknownEdgeId(usize),
    #[error("edges {0} and {1} overlap")]
    OverlappingEdges(usize, usize),
}

/// Errors raised while reading one of the text formats. Graph-level
/// invariant violations keep their own kind and gain the offending line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

impl ParseError {
    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    /// The graph-level error kind behind this parse error, if any.
    pub fn graph_error(&self) -> Option<&GraphError> {
        match self {
            ParseError::Graph { source, .. } => Some(source),
            ParseError::Syntax { .. } => None,
        }
    }
}
