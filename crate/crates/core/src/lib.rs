//! Cluster editing on graphs where every vertex may lose at most one edge and
//! gain at most one edge, with per-vertex permissions for each kind of edit.

pub mod error;
pub mod graph;
pub mod matching;
pub mod pipeline;
pub mod reductions;
pub mod special;
pub mod toolkit;
mod tracker;

pub use error::{Error, Result};
pub use graph::{Budget, EditSolution, Instance, Pair, VertexId, Violation};
pub use pipeline::{solve, verify_solution, Answer, Verdict};
