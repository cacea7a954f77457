//! Graphs, Dijkstra variants, shortest path trees and the centroid split.

mod centroid;
mod dijkstra;
mod graph;
mod spt;

pub use centroid::{centroid_bipartition, CentroidSplit, LEAF_SIZE};
pub use dijkstra::{dijkstra, dijkstra_avoiding, restricted_dijkstra, ShortestPaths};
pub use graph::{Digraph, Edge, VertexId, Weight};
pub use spt::{build_spt, SpTree};
