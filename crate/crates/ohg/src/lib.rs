//! Oriented hypergraphs: signed incidence structures generalizing signed
//! graphs, their incidence matrices over exact arithmetic, structure
//! preserving operations, balance theory, and the structural classification
//! of balanced minimal column dependencies.
//!
//! The `examples/` directory of this crate shows one runnable program per
//! capability; the `ohg` binary exposes the same functionality as a small
//! command-line toolkit over a line-oriented text format.

pub mod analysis;
pub mod classifier;
pub mod cli;
pub mod dot;
pub mod error;
pub mod format;
pub mod generate;
pub mod hypergraph;
pub mod incidence_graph;
pub mod matrix;
pub mod transforms;
pub mod verify;
pub mod walk;

pub use error::{AnalysisError, BuildError, FormatError, GenerateError, TransformError};
pub use hypergraph::{
    Adjacency, EdgeId, Element, Incidence, IncidenceRef, OrientedHypergraph, Sign, VertexId,
};
pub use incidence_graph::IncidenceGraph;
pub use matrix::{DependencyCertificate, DependencyStatus, IncidenceMatrix};
pub use walk::{Walk, WalkKind};
