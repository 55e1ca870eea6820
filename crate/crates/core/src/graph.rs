//! Simple undirected graphs, BFS distances and edge-removal components.
//!
//! Edges are identified by their position in the input list; every other
//! module refers to edges by that index.

use std::collections::VecDeque;

use crate::error::{Error, Result};

const UNSEEN: u32 = u32::MAX;

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Adjacency is stored in compressed form: the neighbours of `v` are
/// `adj[offsets[v]..offsets[v + 1]]`, each paired with the index of the
/// connecting edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    adj: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and endpoints out
    /// of range. Each edge is stored as `(min, max)`; edge indices follow the
    /// input order.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        edge: i,
                        vertex: x,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { edge: i, vertex: u });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        let g = Self::from_normalized(vertex_count, normalized);
        if let Some((edge, first)) = g.first_duplicate() {
            let (u, v) = edges[edge];
            return Err(Error::DuplicateEdge { edge, first, u, v });
        }
        Ok(g)
    }

    /// Earliest edge repeating a previous one, with the index it repeats.
    /// Adjacency lists are filled in edge order, so one marker sweep finds
    /// every repeat in linear time.
    fn first_duplicate(&self) -> Option<(usize, usize)> {
        let mut mark = vec![(usize::MAX, 0usize); self.vertex_count];
        let mut best: Option<(usize, usize)> = None;
        for u in 0..self.vertex_count {
            for &(v, e) in self.neighbors(u) {
                if v < u {
                    continue;
                }
                if mark[v].0 == u {
                    if best.is_none_or(|(b, _)| e < b) {
                        best = Some((e, mark[v].1));
                    }
                } else {
                    mark[v] = (u, e);
                }
            }
        }
        best
    }

    fn from_normalized(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut degree = vec![0usize; vertex_count + 1];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(vertex_count + 1);
        let mut acc = 0;
        offsets.push(0);
        for d in &degree[..vertex_count] {
            acc += d;
            offsets.push(acc);
        }
        let mut cursor = offsets.clone();
        let mut adj = vec![(0, 0); acc];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[cursor[u]] = (v, i);
            cursor[u] += 1;
            adj[cursor[v]] = (u, i);
            cursor[v] += 1;
        }
        Self {
            vertex_count,
            edges,
            offsets,
            adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges as `(u, v)` with `u < v`, in index order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// `(neighbour, edge index)` pairs incident to `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::InvalidVertex {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        Ok(())
    }

    /// BFS hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<u32>>> {
        self.check_vertex(source)?;
        let mut dist = vec![UNSEEN; self.vertex_count];
        let mut queue = VecDeque::new();
        self.bfs_into(source, &mut dist, &mut queue);
        Ok(dist
            .into_iter()
            .map(|d| (d != UNSEEN).then_some(d))
            .collect())
    }

    fn bfs_into(&self, source: usize, dist: &mut [u32], queue: &mut VecDeque<usize>) {
        dist.fill(UNSEEN);
        queue.clear();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let next = dist[x] + 1;
            for &(y, _) in self.neighbors(x) {
                if dist[y] == UNSEEN {
                    dist[y] = next;
                    queue.push_back(y);
                }
            }
        }
    }

    /// Returns an error naming two vertices without a connecting path, if any.
    pub fn ensure_connected(&self) -> Result<()> {
        if self.vertex_count == 0 {
            return Ok(());
        }
        let (count, labels) = self.component_labels(|_| false);
        if count > 1 {
            let v = labels.iter().position(|&c| c != 0).unwrap();
            return Err(Error::Disconnected { u: 0, v });
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        self.ensure_connected().is_ok()
    }

    /// All-pairs hop distances, one BFS per source.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        let n = self.vertex_count;
        let mut data = vec![0u32; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut data[s * n..(s + 1) * n];
            self.bfs_into(s, row, &mut queue);
            if let Some(v) = row.iter().position(|&d| d == UNSEEN) {
                return Err(Error::Disconnected { u: s, v });
            }
        }
        Ok(DistanceMatrix { n, data })
    }

    /// Two-colours the graph, or returns an odd cycle.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.vertex_count;
        let mut depth = vec![UNSEEN; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if depth[root] != UNSEEN {
                continue;
            }
            depth[root] = 0;
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in self.neighbors(x) {
                    if depth[y] == UNSEEN {
                        depth[y] = depth[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if depth[y] == depth[x] {
                        return Bipartition::OddCycle(odd_cycle(x, y, &parent, &depth));
                    }
                }
            }
        }
        Bipartition::Colored(depth.iter().map(|d| d % 2 == 1).collect())
    }

    /// Connected components of the graph with the edges in `removed` deleted.
    ///
    /// Components are ordered by their smallest vertex and each is sorted.
    pub fn components_after_removal(&self, removed: &[usize]) -> Result<Vec<Vec<usize>>> {
        let mut mask = vec![false; self.edge_count()];
        for &e in removed {
            if e >= self.edge_count() {
                return Err(Error::InvalidEdgeIndex {
                    index: e,
                    edge_count: self.edge_count(),
                });
            }
            mask[e] = true;
        }
        let (count, labels) = self.component_labels(|e| mask[e]);
        let mut comps = vec![Vec::new(); count];
        for (v, &c) in labels.iter().enumerate() {
            comps[c].push(v);
        }
        Ok(comps)
    }

    /// Labels vertices by component of the graph minus edges for which
    /// `skip` holds. Component ids are assigned in order of smallest vertex.
    pub(crate) fn component_labels(&self, skip: impl Fn(usize) -> bool) -> (usize, Vec<usize>) {
        let n = self.vertex_count;
        let mut label = vec![usize::MAX; n];
        let mut stack = Vec::new();
        let mut count = 0;
        for root in 0..n {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = count;
            stack.push(root);
            while let Some(x) = stack.pop() {
                for &(y, e) in self.neighbors(x) {
                    if label[y] == usize::MAX && !skip(e) {
                        label[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }
}

fn odd_cycle(x: usize, y: usize, parent: &[usize], depth: &[u32]) -> Vec<usize> {
    // x and y share a BFS level; climb both to their common ancestor.
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    debug_assert_eq!(depth[a], depth[b]);
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Outcome of a bipartiteness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Colour of each vertex.
    Colored(Vec<bool>),
    /// Vertices of an odd cycle in traversal order.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn coloring(&self) -> Option<&[bool]> {
        match self {
            Bipartition::Colored(c) => Some(c),
            Bipartition::OddCycle(_) => None,
        }
    }
}

/// Dense all-pairs distance table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn max(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }
}
