//! Linear-time weighted Wiener and Szeged indices of trees.
//!
//! Root the tree, order the vertices so every vertex comes after its whole
//! subtree, then sweep once: each vertex's weight becomes its subtree weight
//! `s`, its up-edge separates `s` from `n(T) - s`, and the per-edge products
//! are accumulated bottom-up into the root.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{
    checked_add, checked_mul, IndexPair, VertexEdgeWeightedGraph, VertexWeightedGraph,
};

/// Rooted tree with a visit order in which every vertex follows all vertices
/// of its subtree. The root is last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTreeOrder {
    root: usize,
    /// `(parent, up-edge)` per vertex; `None` for the root.
    parent: Vec<Option<(usize, usize)>>,
    order: Vec<usize>,
}

impl RootedTreeOrder {
    /// Roots the tree `g` at `root`. Fails unless `g` is connected with
    /// exactly `n - 1` edges.
    pub fn new(g: &Graph, root: usize) -> Result<Self> {
        let n = g.vertex_count();
        if n == 0 || g.edge_count() != n - 1 {
            return Err(Error::NotATree {
                vertices: n,
                edges: g.edge_count(),
            });
        }
        if root >= n {
            return Err(Error::InvalidVertex {
                vertex: root,
                vertex_count: n,
            });
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        // the output order doubles as the BFS queue
        let mut bfs = Vec::with_capacity(n);
        seen[root] = true;
        bfs.push(root);
        let mut head = 0;
        while let Some(&x) = bfs.get(head) {
            head += 1;
            for &(y, e) in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, e));
                    bfs.push(y);
                }
            }
        }
        if bfs.len() != n {
            return Err(Error::NotATree {
                vertices: n,
                edges: g.edge_count(),
            });
        }
        bfs.reverse();
        Ok(Self {
            root,
            parent,
            order: bfs,
        })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<(usize, usize)> {
        self.parent[v]
    }

    /// Vertices in visit order; children before parents.
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Result of the bottom-up sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpState {
    /// Base-weight sum of each vertex's subtree.
    pub subtree_weight: Vec<u64>,
    /// Szeged partial sums `s(y)` over each subtree, including the up-edge.
    pub szeged_partial: Vec<u64>,
    /// Wiener partial sums over each subtree, including the up-edge.
    pub wiener_partial: Vec<u64>,
    /// `n(T)`, the total vertex weight.
    pub total_weight: u64,
    pub root: usize,
}

impl DpState {
    pub fn indices(&self) -> IndexPair {
        IndexPair {
            wiener: self.wiener_partial[self.root],
            szeged: self.szeged_partial[self.root],
        }
    }
}

/// Runs the sweep over `order`. Edge weights default to 1.
pub fn tree_dp(
    g: &Graph,
    order: &RootedTreeOrder,
    vertex_weights: &[u64],
    edge_weights: Option<&[u64]>,
) -> Result<DpState> {
    let n = g.vertex_count();
    if vertex_weights.len() != n {
        return Err(Error::WeightCount {
            what: "vertex",
            expected: n,
            found: vertex_weights.len(),
        });
    }
    if let Some(ew) = edge_weights {
        if ew.len() != g.edge_count() {
            return Err(Error::WeightCount {
                what: "edge",
                expected: g.edge_count(),
                found: ew.len(),
            });
        }
    }
    let total = vertex_weights
        .iter()
        .try_fold(0u64, |acc, &w| checked_add(acc, w))?;

    let mut weight = vertex_weights.to_vec();
    let mut sz = vec![0u64; n];
    let mut wi = vec![0u64; n];
    for &y in order.order() {
        // Children were visited earlier and already pushed their sums into y.
        let Some((p, e)) = order.parent(y) else {
            continue;
        };
        let below = weight[y];
        let product = checked_mul(below, total - below)?;
        let ew = edge_weights.map_or(1, |w| w[e]);
        sz[y] = checked_add(sz[y], checked_mul(ew, product)?)?;
        wi[y] = checked_add(wi[y], product)?;
        weight[p] = checked_add(weight[p], below)?;
        sz[p] = checked_add(sz[p], sz[y])?;
        wi[p] = checked_add(wi[p], wi[y])?;
    }
    Ok(DpState {
        subtree_weight: weight,
        szeged_partial: sz,
        wiener_partial: wi,
        total_weight: total,
        root: order.root(),
    })
}

/// Both weighted indices of a tree in one `O(n)` pass rooted at vertex 0.
pub fn tree_indices(
    g: &Graph,
    vertex_weights: &[u64],
    edge_weights: Option<&[u64]>,
) -> Result<IndexPair> {
    let order = RootedTreeOrder::new(g, 0)?;
    Ok(tree_dp(g, &order, vertex_weights, edge_weights)?.indices())
}

/// `W(T, w) = sum_e n_1(e|T) n_2(e|T)` in linear time.
pub fn wiener_tree_linear(t: &VertexWeightedGraph) -> Result<u64> {
    Ok(tree_indices(t.graph(), t.weights(), None)?.wiener)
}

/// `Sz(T, w, w')` in linear time.
pub fn szeged_tree_linear(t: &VertexEdgeWeightedGraph) -> Result<u64> {
    Ok(tree_indices(t.graph(), t.vertex_weights(), Some(t.edge_weights()))?.szeged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, tree_from_parents};

    #[test]
    fn fixture_paths() {
        let t = VertexWeightedGraph::new(path(3), vec![4, 12, 12]).unwrap();
        assert_eq!(wiener_tree_linear(&t).unwrap(), 288);
        let t = VertexWeightedGraph::new(path(4), vec![4, 10, 10, 4]).unwrap();
        assert_eq!(wiener_tree_linear(&t).unwrap(), 388);
        let t = VertexEdgeWeightedGraph::new(path(3), vec![4, 12, 12], vec![2, 4]).unwrap();
        assert_eq!(szeged_tree_linear(&t).unwrap(), 960);
    }

    #[test]
    fn fixture_star_path() {
        // a=0 (4), b=1 (4), c=2 (8), d=3 (7), e=4 (5)
        let g = Graph::new(5, &[(0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        let t = VertexEdgeWeightedGraph::new(g, vec![4, 4, 8, 7, 5], vec![2, 2, 4, 3]).unwrap();
        assert_eq!(szeged_tree_linear(&t).unwrap(), 1497);
        assert_eq!(wiener_tree_linear(&t.to_vertex_weighted()).unwrap(), 499);
    }

    #[test]
    fn single_vertex_and_zero_edge_weights() {
        let t = VertexWeightedGraph::new(path(1), vec![7]).unwrap();
        assert_eq!(wiener_tree_linear(&t).unwrap(), 0);
        let g = tree_from_parents(&[0, 0, 1, 1]);
        let t = VertexEdgeWeightedGraph::new(g, vec![3; 5], vec![0; 4]).unwrap();
        assert_eq!(szeged_tree_linear(&t).unwrap(), 0);
    }

    #[test]
    fn rejects_non_trees() {
        let t = VertexWeightedGraph::unit(cycle(4));
        assert_eq!(
            wiener_tree_linear(&t),
            Err(Error::NotATree {
                vertices: 4,
                edges: 4
            })
        );
        // n - 1 edges but disconnected: a triangle plus an isolated vertex.
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            tree_indices(&g, &[1; 4], None),
            Err(Error::NotATree { .. })
        ));
    }

    #[test]
    fn order_puts_subtrees_first() {
        let g = tree_from_parents(&[0, 0, 1, 1, 2]);
        let order = RootedTreeOrder::new(&g, 0).unwrap();
        assert_eq!(*order.order().last().unwrap(), 0);
        let pos: Vec<usize> = {
            let mut pos = vec![0; 6];
            for (i, &v) in order.order().iter().enumerate() {
                pos[v] = i;
            }
            pos
        };
        for v in 1..6 {
            let (p, _) = order.parent(v).unwrap();
            assert!(pos[v] < pos[p]);
        }
        let state = tree_dp(&g, &order, &[1; 6], None).unwrap();
        assert_eq!(state.subtree_weight, vec![6, 3, 2, 1, 1, 1]);
        assert_eq!(state.total_weight, 6);
    }
}
