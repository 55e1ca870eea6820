//! Coarser partitions of the Θ-classes and the weighted quotient graphs they
//! induce.
//!
//! For a group `F` of Θ-classes, the quotient `G / F` has one vertex per
//! connected component of `G - F`, two components being adjacent when an
//! edge of `F` joins them. Vertex weights are summed component weights and
//! edge weights count (or sum the weights of) the folded `F`-edges.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{checked_add, VertexEdgeWeightedGraph};
use crate::theta::{recognize_partial_cube, PartialCube, Recognition, ThetaPartition};

/// A grouping of Θ-class indices into disjoint nonempty groups covering every
/// class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoarserPartition {
    groups: Vec<Vec<usize>>,
    group_of: Vec<usize>,
}

impl CoarserPartition {
    /// Every class in its own group.
    pub fn finest(theta: &ThetaPartition) -> Self {
        let groups: Vec<_> = (0..theta.len()).map(|j| vec![j]).collect();
        let group_of = (0..theta.len()).collect();
        Self { groups, group_of }
    }

    /// All classes in a single group (none for an edgeless graph).
    pub fn coarsest(theta: &ThetaPartition) -> Self {
        if theta.is_empty() {
            return Self {
                groups: Vec::new(),
                group_of: Vec::new(),
            };
        }
        Self {
            groups: vec![(0..theta.len()).collect()],
            group_of: vec![0; theta.len()],
        }
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn group(&self, i: usize) -> &[usize] {
        &self.groups[i]
    }

    pub fn group_of(&self, class: usize) -> usize {
        self.group_of[class]
    }
}

/// Accepts `grouping` iff it partitions the class indices of `theta`.
pub fn validate_coarser(
    theta: &ThetaPartition,
    grouping: &[Vec<usize>],
) -> Result<CoarserPartition> {
    let r = theta.len();
    let mut group_of = vec![usize::MAX; r];
    let mut groups = Vec::with_capacity(grouping.len());
    for (i, group) in grouping.iter().enumerate() {
        if group.is_empty() {
            return Err(Error::EmptyGroup { group: i });
        }
        for &c in group {
            if c >= r {
                return Err(Error::ClassOutOfRange {
                    class: c,
                    class_count: r,
                });
            }
            if group_of[c] != usize::MAX {
                return Err(Error::DuplicateClass { class: c });
            }
            group_of[c] = i;
        }
        let mut sorted = group.clone();
        sorted.sort_unstable();
        groups.push(sorted);
    }
    if let Some(c) = group_of.iter().position(|&g| g == usize::MAX) {
        return Err(Error::MissingClass { class: c });
    }
    Ok(CoarserPartition { groups, group_of })
}

/// The weighted quotient `(G / F_i, w_i, w_i')` of one group.
#[derive(Debug, Clone)]
pub struct WeightedQuotient {
    weighted: VertexEdgeWeightedGraph,
    membership: Vec<usize>,
    class_map: Vec<Vec<usize>>,
    classes: Vec<usize>,
    anchors: Vec<usize>,
}

impl WeightedQuotient {
    pub fn graph(&self) -> &Graph {
        self.weighted.graph()
    }

    pub fn weighted(&self) -> &VertexEdgeWeightedGraph {
        &self.weighted
    }

    pub fn into_weighted(self) -> VertexEdgeWeightedGraph {
        self.weighted
    }

    pub fn vertex_weights(&self) -> &[u64] {
        self.weighted.vertex_weights()
    }

    pub fn edge_weights(&self) -> &[u64] {
        self.weighted.edge_weights()
    }

    /// Quotient vertex of each original vertex.
    pub fn membership(&self) -> &[usize] {
        &self.membership
    }

    /// Original Θ-class indices represented by each quotient edge.
    pub fn class_map(&self) -> &[Vec<usize>] {
        &self.class_map
    }

    /// Original Θ-classes making up this group, ascending.
    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    /// Quotient vertex containing the lower endpoint of the first edge of
    /// `classes()[k]`.
    pub fn anchor(&self, k: usize) -> usize {
        self.anchors[k]
    }
}

/// Builds `G / F_i` for group `group` of `cp`.
///
/// Vertex weights default to 1, so `w_i` counts component sizes.
pub fn build_quotient(
    pc: &PartialCube,
    cp: &CoarserPartition,
    group: usize,
    vertex_weights: Option<&[u64]>,
) -> Result<WeightedQuotient> {
    build_quotient_weighted(pc, cp, group, vertex_weights, None)
}

/// [`build_quotient`] with optional base edge weights; `w_i'` then sums the
/// weights of the folded edges instead of counting them.
pub fn build_quotient_weighted(
    pc: &PartialCube,
    cp: &CoarserPartition,
    group: usize,
    vertex_weights: Option<&[u64]>,
    edge_weights: Option<&[u64]>,
) -> Result<WeightedQuotient> {
    if group >= cp.len() {
        return Err(Error::GroupOutOfRange {
            group,
            group_count: cp.len(),
        });
    }
    quotient_of_classes(
        pc.graph(),
        pc.theta(),
        cp.group(group),
        vertex_weights,
        edge_weights,
    )
}

/// Quotient of `g` by the union of the Θ-classes `classes`. Runs in
/// `O(n + m)` expected time.
pub(crate) fn quotient_of_classes(
    g: &Graph,
    theta: &ThetaPartition,
    classes: &[usize],
    vertex_weights: Option<&[u64]>,
    edge_weights: Option<&[u64]>,
) -> Result<WeightedQuotient> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if let Some(w) = vertex_weights {
        if w.len() != n {
            return Err(Error::WeightCount {
                what: "vertex",
                expected: n,
                found: w.len(),
            });
        }
    }
    if let Some(w) = edge_weights {
        if w.len() != m {
            return Err(Error::WeightCount {
                what: "edge",
                expected: m,
                found: w.len(),
            });
        }
    }
    let mut in_group = vec![false; theta.len()];
    for &c in classes {
        in_group[c] = true;
    }
    let (count, membership) = g.component_labels(|e| in_group[theta.class_of(e)]);

    let mut qweights = vec![0u64; count];
    for (v, &c) in membership.iter().enumerate() {
        let w = vertex_weights.map_or(1, |w| w[v]);
        qweights[c] = checked_add(qweights[c], w)?;
    }

    let mut slot: HashMap<(usize, usize), usize> = HashMap::new();
    let mut qedges = Vec::new();
    let mut qedge_weights = Vec::new();
    let mut class_map: Vec<Vec<usize>> = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let c = theta.class_of(e);
        if !in_group[c] {
            continue;
        }
        let (a, b) = (membership[u], membership[v]);
        // A group edge inside a single component cannot occur in a partial
        // cube; skip it so the quotient stays simple.
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        let idx = *slot.entry(key).or_insert_with(|| {
            qedges.push(key);
            qedge_weights.push(0);
            class_map.push(Vec::new());
            qedges.len() - 1
        });
        let w = edge_weights.map_or(1, |w| w[e]);
        qedge_weights[idx] = checked_add(qedge_weights[idx], w)?;
        if !class_map[idx].contains(&c) {
            class_map[idx].push(c);
        }
    }
    for cs in &mut class_map {
        cs.sort_unstable();
    }

    let mut group_classes = classes.to_vec();
    group_classes.sort_unstable();
    let anchors = group_classes
        .iter()
        .map(|&c| membership[g.edge(theta.class(c)[0]).0])
        .collect();

    let quotient = Graph::new(count, &qedges)?;
    Ok(WeightedQuotient {
        weighted: VertexEdgeWeightedGraph::new(quotient, qweights, qedge_weights)?,
        membership,
        class_map,
        classes: group_classes,
        anchors,
    })
}

/// One Θ-class `U` of a quotient, mapped back to the original graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientClass {
    /// Quotient edge indices forming `U`.
    pub quotient_edges: Vec<usize>,
    /// Original Θ-classes represented by the edges of `U`.
    pub classes: Vec<usize>,
    /// Sum of `w'` over `U`; equals the size of the original class.
    pub edge_total: u64,
    /// Weighted side sums of `U`, oriented like the original class.
    pub sides: (u64, u64),
}

/// Θ-classes of a weighted quotient with the weight transfers back to `G`.
///
/// Fails with [`Error::NotPartialCube`] if the quotient is not a partial
/// cube, which would mean the quotient was not built from a partial cube.
/// Summaries are ordered by original class index.
pub fn quotient_theta_classes(wq: &WeightedQuotient) -> Result<Vec<QuotientClass>> {
    let pc = match recognize_partial_cube(wq.graph())? {
        Recognition::Accepted(pc) => pc,
        Recognition::Rejected(w) => return Err(Error::NotPartialCube(w)),
    };
    let vw = wq.vertex_weights();
    let ew = wq.edge_weights();
    let mut out = Vec::with_capacity(pc.class_count());
    for (j, edges) in pc.theta().classes().iter().enumerate() {
        let mut classes: Vec<usize> = edges
            .iter()
            .flat_map(|&f| wq.class_map()[f].iter().copied())
            .collect();
        classes.sort_unstable();
        classes.dedup();
        let mut edge_total = 0u64;
        for &f in edges {
            edge_total = checked_add(edge_total, ew[f])?;
        }
        let (mut first, mut second) = (0u64, 0u64);
        for (x, &w) in vw.iter().enumerate() {
            if pc.on_second_side(x, j) {
                second = checked_add(second, w)?;
            } else {
                first = checked_add(first, w)?;
            }
        }
        // Orient by the original class's anchor vertex.
        if let [c] = classes[..] {
            if let Ok(k) = wq.classes().binary_search(&c) {
                if pc.on_second_side(wq.anchor(k), j) {
                    std::mem::swap(&mut first, &mut second);
                }
            }
        }
        out.push(QuotientClass {
            quotient_edges: edges.clone(),
            classes,
            edge_total,
            sides: (first, second),
        });
    }
    out.sort_by(|a, b| a.classes.cmp(&b.classes));
    Ok(out)
}
