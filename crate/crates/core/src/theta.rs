//! The Djoković–Winkler relation, its transitive closure and partial-cube
//! recognition.
//!
//! Two edges `u1v1` and `u2v2` are in relation Θ when
//! `d(u1,u2) + d(v1,v2) != d(u1,v2) + d(v1,u2)`. A connected graph is a
//! partial cube exactly when it is bipartite and Θ is already transitive; in
//! that case removing any Θ-class leaves two components, and recording which
//! side a vertex lies on for every class gives an isometric hypercube
//! labelling.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, DistanceMatrix, Graph};
use crate::union_find::UnionFind;

/// Whether `e1` and `e2` are in relation Θ under the distances `d`.
#[inline]
pub fn theta_related(d: &DistanceMatrix, e1: (usize, usize), e2: (usize, usize)) -> bool {
    let (u1, v1) = e1;
    let (u2, v2) = e2;
    d.get(u1, u2) + d.get(v1, v2) != d.get(u1, v2) + d.get(v1, u2)
}

/// Partition of the edge indices into Θ*-classes.
///
/// Classes are sorted internally and ordered by their smallest edge index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ThetaPartition {
    /// Normalizes `classes`, which must partition `0..edge_count`.
    pub(crate) fn from_classes(edge_count: usize, mut classes: Vec<Vec<usize>>) -> Self {
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.retain(|c| !c.is_empty());
        classes.sort_unstable_by_key(|c| c[0]);
        let mut class_of = vec![usize::MAX; edge_count];
        for (j, c) in classes.iter().enumerate() {
            for &e in c {
                debug_assert_eq!(class_of[e], usize::MAX, "edge {e} in two classes");
                class_of[e] = j;
            }
        }
        debug_assert!(class_of.iter().all(|&j| j != usize::MAX));
        Self { classes, class_of }
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, j: usize) -> &[usize] {
        &self.classes[j]
    }

    pub fn class_of(&self, edge: usize) -> usize {
        self.class_of[edge]
    }

    pub fn edge_count(&self) -> usize {
        self.class_of.len()
    }
}

/// Θ*-classes of a connected graph by pairwise Θ tests.
pub fn theta_star_classes(g: &Graph) -> Result<ThetaPartition> {
    let d = g.distance_matrix()?;
    Ok(theta_star_with(g, &d))
}

pub(crate) fn theta_star_with(g: &Graph, d: &DistanceMatrix) -> ThetaPartition {
    let m = g.edge_count();
    let edges = g.edges();
    let mut uf = UnionFind::new(m);
    for i in 0..m {
        for j in i + 1..m {
            if theta_related(d, edges[i], edges[j]) {
                uf.union(i, j);
            }
        }
    }
    ThetaPartition::from_classes(m, uf.groups())
}

/// Fixed-length bit string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Label {
    len: usize,
    words: Vec<u64>,
}

impl Label {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, j: usize) -> bool {
        assert!(j < self.len);
        self.words[j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, j: usize, bit: bool) {
        assert!(j < self.len);
        let mask = 1u64 << (j % 64);
        if bit {
            self.words[j / 64] |= mask;
        } else {
            self.words[j / 64] &= !mask;
        }
    }

    pub fn hamming(&self, other: &Label) -> u32 {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones())
            .sum()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len {
            f.write_str(if self.get(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A graph verified to be a partial cube, with its Θ-classes and hypercube
/// labelling.
///
/// Bit `j` of a vertex label is 0 exactly when the vertex lies in the
/// component of `G - E_j` containing the lower endpoint of the first edge of
/// class `j`.
#[derive(Debug, Clone)]
pub struct PartialCube {
    graph: Graph,
    theta: ThetaPartition,
    labels: Vec<Label>,
    side_sizes: Vec<(usize, usize)>,
}

impl PartialCube {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn theta(&self) -> &ThetaPartition {
        &self.theta
    }

    pub fn class_count(&self) -> usize {
        self.theta.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &Label {
        &self.labels[v]
    }

    /// `(n1, n2)` for class `j`.
    pub fn side_sizes(&self, j: usize) -> (usize, usize) {
        self.side_sizes[j]
    }

    /// Whether vertex `v` lies on the second side of class `j`.
    pub fn on_second_side(&self, v: usize, j: usize) -> bool {
        self.labels[v].get(j)
    }

    /// The two sides of class `j` and the class size. The first side holds the
    /// lower endpoint of the class's smallest-index edge.
    pub fn class_sides(&self, j: usize) -> (Vec<usize>, Vec<usize>, usize) {
        let (first, second): (Vec<usize>, Vec<usize>) =
            (0..self.graph.vertex_count()).partition(|&v| !self.labels[v].get(j));
        (first, second, self.theta.class(j).len())
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

/// Reason a connected graph is not a partial cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An odd cycle, listed in traversal order.
    OddCycle(Vec<usize>),
    /// A Θ*-class whose removal leaves other than two components.
    ClassComponents {
        class: usize,
        edges: Vec<usize>,
        components: usize,
    },
    /// A vertex pair whose label Hamming distance differs from the graph
    /// distance.
    HammingMismatch {
        u: usize,
        v: usize,
        distance: u32,
        hamming: u32,
    },
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::OddCycle(_) => "odd_cycle",
            Witness::ClassComponents { .. } => "class_components",
            Witness::HammingMismatch { .. } => "hamming_mismatch",
        }
    }

    /// Rechecks the witness against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Witness::OddCycle(cycle) => {
                let k = cycle.len();
                let mut sorted = cycle.clone();
                sorted.sort_unstable();
                sorted.dedup();
                k % 2 == 1
                    && sorted.len() == k
                    && (0..k).all(|i| {
                        let (a, b) = (cycle[i], cycle[(i + 1) % k]);
                        a < g.vertex_count() && g.neighbors(a).iter().any(|&(y, _)| y == b)
                    })
            }
            Witness::ClassComponents {
                edges, components, ..
            } => {
                let Ok(theta) = theta_star_classes(g) else {
                    return false;
                };
                let is_class = theta.classes().iter().any(|c| c == edges);
                let found = g.components_after_removal(edges).map(|c| c.len());
                is_class && *components != 2 && found == Ok(*components)
            }
            Witness::HammingMismatch {
                u,
                v,
                distance,
                hamming,
            } => {
                let Ok(theta) = theta_star_classes(g) else {
                    return false;
                };
                let Ok(d) = g.bfs_distances(*u) else {
                    return false;
                };
                let mut differ = 0;
                for c in theta.classes() {
                    let comps = match g.components_after_removal(c) {
                        Ok(comps) => comps,
                        Err(_) => return false,
                    };
                    let side = |x: usize| comps.iter().position(|cc| cc.contains(&x));
                    if side(*u) != side(*v) {
                        differ += 1;
                    }
                }
                d.get(*v).copied().flatten() == Some(*distance)
                    && differ == *hamming
                    && distance != hamming
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::OddCycle(c) => write!(f, "odd cycle of length {} through {:?}", c.len(), c),
            Witness::ClassComponents {
                class,
                edges,
                components,
            } => write!(
                f,
                "removing class {class} ({} edges) leaves {components} components",
                edges.len()
            ),
            Witness::HammingMismatch {
                u,
                v,
                distance,
                hamming,
            } => write!(
                f,
                "vertices {u} and {v} are at distance {distance} but labels differ in {hamming} places"
            ),
        }
    }
}

/// Outcome of partial-cube recognition.
#[derive(Debug, Clone)]
pub enum Recognition {
    Accepted(PartialCube),
    Rejected(Witness),
}

impl Recognition {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Recognition::Accepted(_))
    }

    pub fn into_result(self) -> Result<PartialCube> {
        match self {
            Recognition::Accepted(pc) => Ok(pc),
            Recognition::Rejected(w) => Err(Error::NotPartialCube(w)),
        }
    }
}

/// Decides whether a connected graph is a partial cube.
///
/// Runs a bipartiteness test, computes the Θ*-classes by pairwise tests over
/// the distance matrix, builds the labelling from the two components of each
/// `G - E_j`, then checks Hamming distance against graph distance for every
/// vertex pair.
pub fn recognize_partial_cube(g: &Graph) -> Result<Recognition> {
    g.ensure_connected()?;
    if let Bipartition::OddCycle(c) = g.bipartition() {
        return Ok(Recognition::Rejected(Witness::OddCycle(c)));
    }
    let d = g.distance_matrix()?;
    let theta = theta_star_with(g, &d);
    let n = g.vertex_count();
    let r = theta.len();

    let mut labels = vec![Label::zeros(r); n];
    let mut side_sizes = Vec::with_capacity(r);
    for j in 0..r {
        let (count, comp) = g.component_labels(|e| theta.class_of(e) == j);
        if count != 2 {
            return Ok(Recognition::Rejected(Witness::ClassComponents {
                class: j,
                edges: theta.class(j).to_vec(),
                components: count,
            }));
        }
        let anchor = comp[g.edge(theta.class(j)[0]).0];
        let mut second = 0;
        for (x, label) in labels.iter_mut().enumerate() {
            if comp[x] != anchor {
                label.set(j, true);
                second += 1;
            }
        }
        side_sizes.push((n - second, second));
    }

    for u in 0..n {
        for v in u + 1..n {
            let hamming = labels[u].hamming(&labels[v]);
            let distance = d.get(u, v);
            if hamming != distance {
                return Ok(Recognition::Rejected(Witness::HammingMismatch {
                    u,
                    v,
                    distance,
                    hamming,
                }));
            }
        }
    }

    Ok(Recognition::Accepted(PartialCube {
        graph: g.clone(),
        theta,
        labels,
        side_sizes,
    }))
}
