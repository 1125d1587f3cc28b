//! Exact triangle counting on undirected simple graphs.
//!
//! Graphs are loaded into an immutable CSR [`Graph`], then counted with any
//! of the sequential or shared-memory kernels named by [`AlgorithmId`]. The
//! [`bfs`] module builds the level labeling and cover-edge set used by the
//! cover-edge family, and [`dm`] simulates the distributed variant together
//! with its communication model.

pub mod algorithm;
pub mod bfs;
pub mod dm;
pub mod error;
pub mod generate;
pub mod graph;
pub mod intersect;
pub mod io;
pub mod par;
pub mod seq;

pub use algorithm::{count, count_sequential, AlgorithmId, TriangleCount};
pub use bfs::{bfs_label, cover_edges, verify_cover, BfsLabeling, CoverEdgeSet, EdgeClass};
pub use error::{Error, Result};
pub use generate::{generate_gnp, generate_rmat, RmatParams};
pub use graph::{degree_order, normalize, wedge_count, EdgeList, Graph, VertexId};
pub use par::ParallelConfig;
