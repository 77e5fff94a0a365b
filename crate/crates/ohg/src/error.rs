//! Error types shared across the crate.

use thiserror::Error;

/// Validation failures raised while assembling an oriented hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("id `{0}` declared more than once")]
    DuplicateId(String),
    #[error("malformed id `{0}` (ids must be non-empty and whitespace-free)")]
    MalformedId(String),
    #[error("slots for ({vertex},{edge}) are not the consecutive range 1..={count}")]
    SlotGap {
        vertex: String,
        edge: String,
        count: u32,
    },
    #[error("strict mode: incidences of ({vertex},{edge}) carry mixed signs")]
    MixedSigns { vertex: String, edge: String },
}

/// Failures of the structure-preserving operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("edge `{0}` is not a 2-edge with two distinct endpoints")]
    NotA2Edge(String),
    #[error("edge `{0}` has both incidences at one vertex; contraction is undefined")]
    LoopEdge(String),
    #[error("vertex `{0}` does not have degree 2")]
    NotDegree2(String),
    #[error("both incidences of vertex `{0}` lie in one edge; contraction is undefined")]
    SameEdge(String),
    #[error("parts do not bipartition the incidences of edge `{0}`")]
    BadBipartition(String),
}

/// Failures of the analysis operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("enumeration limit exceeded: {what} (limit {limit})")]
    LimitExceeded { what: &'static str, limit: usize },
    #[error("walk is not a valid walk of the hypergraph: {0}")]
    InvalidWalk(String),
    #[error("walk is not a circle of the hypergraph: {0}")]
    NotACircle(String),
    #[error("matrix entry {0} is outside {{0,+1,-1}}")]
    BadEntries(i64),
}

impl AnalysisError {
    pub fn is_limit(&self) -> bool {
        matches!(self, AnalysisError::LimitExceeded { .. })
    }
}

/// Failures while parsing or re-validating the text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("semantic error{}: {source}", loc(.line))]
    Semantic {
        line: Option<usize>,
        #[source]
        source: BuildError,
    },
}

fn loc(line: &Option<usize>) -> String {
    match line {
        Some(n) => format!(" at line {n}"),
        None => String::new(),
    }
}

/// Failures of the seeded generator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("infeasible generator parameters: {0}")]
    InfeasibleParams(String),
}
