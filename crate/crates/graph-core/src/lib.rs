//! Simple undirected graphs with sorted adjacency lists, plus the traversal
//! and local-structure queries shared by every other crate in this workspace.
//!
//! Graphs are immutable after construction; "modifications" (vertex/edge
//! deletion, edge addition) build new graphs.

mod bfs;
mod graph;
pub mod fixtures;
pub mod parse;

pub use bfs::BfsTree;
pub use graph::{Edge, Graph, GraphError, Vertex};

/// Normalizes an unordered vertex pair into `(min, max)` form.
pub fn norm_edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}
