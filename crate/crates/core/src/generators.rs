//! Small named graph families used in tests and examples.

use crate::graph::Graph;

/// The hypercube `Q_dim`; vertex `x` is the bit string of its id.
pub fn hypercube(dim: u32) -> Graph {
    let n = 1usize << dim;
    let mut edges = Vec::with_capacity(n * dim as usize / 2);
    for x in 0..n {
        for b in 0..dim {
            let y = x ^ (1 << b);
            if x < y {
                edges.push((x, y));
            }
        }
    }
    Graph::new(n, &edges).expect("hypercube edges are simple")
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("path edges are simple")
}

/// Cycle on `n >= 3` vertices with edges `(i, i+1)` and the closing edge last.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, &edges).expect("cycle edges are simple")
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::new(a + b, &edges).expect("complete bipartite edges are simple")
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::new(leaves + 1, &edges).expect("star edges are simple")
}

/// Tree from a parent array: vertex `i > 0` hangs below `parents[i - 1] < i`.
pub fn tree_from_parents(parents: &[usize]) -> Graph {
    let edges: Vec<_> = parents
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i + 1))
        .collect();
    Graph::new(parents.len() + 1, &edges).expect("parent array must describe a tree")
}
