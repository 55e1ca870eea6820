//! The four weighted quotient trees of a 28-vertex C4C8 system, one per edge
//! direction, with their known index values.
//!
//! Tree 1 is a star-path `a - c, b - c, c - d, d - e` with vertex weights
//! `a = 4, b = 4, c = 8, d = 7, e = 5`; trees 2 to 4 are weighted paths.

use crate::graph::Graph;
use crate::indices::VertexEdgeWeightedGraph;

/// Weighted Wiener index of each tree.
pub const WIENER: [u64; 4] = [499, 288, 467, 388];
/// Weighted Szeged index of each tree.
pub const SZEGED: [u64; 4] = [1497, 960, 1561, 972];
pub const WIENER_TOTAL: u64 = 1642;
pub const SZEGED_TOTAL: u64 = 4990;

fn weighted(n: usize, edges: &[(usize, usize)], vw: &[u64], ew: &[u64]) -> VertexEdgeWeightedGraph {
    let g = Graph::new(n, edges).expect("fixture edges are simple");
    VertexEdgeWeightedGraph::new(g, vw.to_vec(), ew.to_vec()).expect("fixture weights match")
}

fn weighted_path(vw: &[u64], ew: &[u64]) -> VertexEdgeWeightedGraph {
    let edges: Vec<_> = (1..vw.len()).map(|i| (i - 1, i)).collect();
    weighted(vw.len(), &edges, vw, ew)
}

/// The trees in direction order.
pub fn quotient_trees() -> [VertexEdgeWeightedGraph; 4] {
    [
        weighted(
            5,
            &[(0, 2), (1, 2), (2, 3), (3, 4)],
            &[4, 4, 8, 7, 5],
            &[2, 2, 4, 3],
        ),
        weighted_path(&[4, 12, 12], &[2, 4]),
        weighted_path(&[8, 8, 7, 5], &[4, 3, 3]),
        weighted_path(&[4, 10, 10, 4], &[2, 3, 2]),
    ]
}
