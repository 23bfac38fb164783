//! Solvers for Partial VC Dimension and its relatives on hypergraphs.
//!
//! A candidate vertex set `C` splits the hyperedges into classes by their
//! trace `e ∩ C`. The crate answers how many classes `k` vertices can induce
//! (exactly, approximately, and on planar neighborhood hypergraphs), computes
//! VC dimension and minimum distinguishing transversals, and builds the
//! classic hardness constructions as checkable instance generators.
//!
//! Vertices are 0-based in memory and 1-based in every file and record.

pub mod approx;
pub mod cli;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod planar;
pub mod reductions;
pub mod vertex_set;

mod search;

pub use approx::{ApproxResult, Method, ShatterCertificate};
pub use error::{Error, Result};
pub use exact::{SearchConfig, SolveResult, Problem};
pub use graph::{neighborhood_hypergraph, Graph};
pub use planar::{compute_levels, LeveledPlanarGraph};
pub use hypergraph::{Hypergraph, TraceProfile, TwinReduction};
pub use vertex_set::VertexSet;
