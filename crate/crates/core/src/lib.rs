//! Exact Eulerian analysis of finite directed multigraphs.
//!
//! The crate represents multidigraphs with first-class parallel edges and
//! loops, classifies them as circuit-Eulerian, path-Eulerian, or neither,
//! extracts Eulerian circuits and dipaths constructively, builds two-way
//! doubles of undirected multigraphs, and counts Eulerian circuits exactly
//! with arbitrary-precision integers.
//!
//! Counting deliberately runs on two independent routes, exhaustive
//! backtracking and a determinant-based formula, and the [`oracle`] module
//! carries brute-force searches that adjudicate the analytic code paths over
//! exhaustive small universes.
//!
//! Everything is immutable after construction and safe to share across
//! threads. With the default `parallel` feature, the maximum-count search in
//! [`counting::fstar_search`] evaluates candidates on a rayon pool;
//! disabling the feature falls back to an equivalent sequential sweep with
//! identical output.

pub mod connectivity;
pub mod counting;
pub mod error;
pub mod eulerian;
mod format;
pub mod graph;
pub mod oracle;
pub mod trail;
pub mod twoway;

pub use error::Error;
pub use graph::{CountMatrix, DegreeProfile, EdgeId, MultiGraph, Multidigraph, MultiplicityMap, VertexId};
pub use trail::Trail;
