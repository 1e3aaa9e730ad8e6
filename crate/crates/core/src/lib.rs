//! Exact path numbers of graphs: the minimum number of edge-disjoint paths
//! whose union is the edge set.

pub mod error;
pub mod extend;
pub mod feasibility;
pub mod graph;
mod greedy;
pub mod oracle;
pub mod pattern;
pub mod preprocess;
pub mod solver;
pub mod structure;
pub mod subcubic;

mod search;

pub use error::{Error, Result};
pub use graph::{parse_graph, Edge, Graph, GraphBuilder, Path, PathPartition, Vertex};
pub use solver::{
    path_number, path_partition, solve, verify_partition, Solution, SolveOptions, SolveStats,
};
pub use subcubic::{partition_subcubic, pn_subcubic};
