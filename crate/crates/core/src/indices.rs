//! Wiener and Szeged index evaluators.
//!
//! The brute-force evaluators work from the all-pairs distance matrix of any
//! connected graph. The cut evaluators sum per-class products over the
//! Θ-classes of a partial cube, and the partition evaluators sum weighted
//! indices of the quotient graphs of a coarser partition. All arithmetic is
//! exact `u64` with overflow reported as [`Error::Overflow`].

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::quotient::{build_quotient_weighted, CoarserPartition};
use crate::theta::PartialCube;

#[inline]
pub(crate) fn checked_add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn checked_mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn check_len(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::WeightCount {
            what,
            expected,
            found,
        });
    }
    Ok(())
}

/// A graph with a weight on every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexWeightedGraph {
    graph: Graph,
    weights: Vec<u64>,
}

impl VertexWeightedGraph {
    pub fn new(graph: Graph, weights: Vec<u64>) -> Result<Self> {
        check_len("vertex", graph.vertex_count(), weights.len())?;
        Ok(Self { graph, weights })
    }

    pub fn unit(graph: Graph) -> Self {
        let weights = vec![1; graph.vertex_count()];
        Self { graph, weights }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }
}

/// A graph with weights on every vertex and every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexEdgeWeightedGraph {
    graph: Graph,
    vertex_weights: Vec<u64>,
    edge_weights: Vec<u64>,
}

impl VertexEdgeWeightedGraph {
    pub fn new(graph: Graph, vertex_weights: Vec<u64>, edge_weights: Vec<u64>) -> Result<Self> {
        check_len("vertex", graph.vertex_count(), vertex_weights.len())?;
        check_len("edge", graph.edge_count(), edge_weights.len())?;
        Ok(Self {
            graph,
            vertex_weights,
            edge_weights,
        })
    }

    pub fn unit(graph: Graph) -> Self {
        let vertex_weights = vec![1; graph.vertex_count()];
        let edge_weights = vec![1; graph.edge_count()];
        Self {
            graph,
            vertex_weights,
            edge_weights,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_weights(&self) -> &[u64] {
        &self.vertex_weights
    }

    pub fn edge_weights(&self) -> &[u64] {
        &self.edge_weights
    }

    /// Drops the edge weights.
    pub fn to_vertex_weighted(&self) -> VertexWeightedGraph {
        VertexWeightedGraph {
            graph: self.graph.clone(),
            weights: self.vertex_weights.clone(),
        }
    }
}

/// A Wiener/Szeged pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexPair {
    pub wiener: u64,
    pub szeged: u64,
}

impl IndexPair {
    /// Componentwise sum, failing on overflow.
    pub fn checked_add(self, other: IndexPair) -> Result<IndexPair> {
        Ok(IndexPair {
            wiener: checked_add(self.wiener, other.wiener)?,
            szeged: checked_add(self.szeged, other.szeged)?,
        })
    }
}

fn weighted_wiener_from(d: &DistanceMatrix, w: &[u64]) -> Result<u64> {
    let n = d.len();
    let mut total = 0u64;
    for u in 0..n {
        let row = d.row(u);
        for v in u + 1..n {
            let term = checked_mul(checked_mul(w[u], w[v])?, row[v] as u64)?;
            total = checked_add(total, term)?;
        }
    }
    Ok(total)
}

/// Weighted sums of the vertices strictly closer to `u` and strictly closer
/// to `v`. Equidistant vertices count on neither side.
fn strict_sides(d: &DistanceMatrix, u: usize, v: usize, w: &[u64]) -> Result<(u64, u64)> {
    let (du, dv) = (d.row(u), d.row(v));
    let (mut first, mut second) = (0u64, 0u64);
    for x in 0..d.len() {
        if du[x] < dv[x] {
            first = checked_add(first, w[x])?;
        } else if dv[x] < du[x] {
            second = checked_add(second, w[x])?;
        }
    }
    Ok((first, second))
}

fn weighted_szeged_from(g: &Graph, d: &DistanceMatrix, w: &[u64], ew: &[u64]) -> Result<u64> {
    let mut total = 0u64;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (n1, n2) = strict_sides(d, u, v, w)?;
        total = checked_add(total, checked_mul(checked_mul(ew[e], n1)?, n2)?)?;
    }
    Ok(total)
}

/// Sum of distances over all unordered vertex pairs.
pub fn wiener_brute(g: &Graph) -> Result<u64> {
    let d = g.distance_matrix()?;
    weighted_wiener_from(&d, &vec![1; g.vertex_count()])
}

/// Sum over edges `uv` of `n_u * n_v`, with `n_u` counting vertices strictly
/// closer to `u`.
pub fn szeged_brute(g: &Graph) -> Result<u64> {
    let d = g.distance_matrix()?;
    let n = g.vertex_count();
    weighted_szeged_from(g, &d, &vec![1; n], &vec![1; g.edge_count()])
}

/// Vertex-weighted Wiener index, `sum_{u<v} w(u) w(v) d(u, v)`.
pub fn wiener_weighted(gw: &VertexWeightedGraph) -> Result<u64> {
    let d = gw.graph.distance_matrix()?;
    weighted_wiener_from(&d, &gw.weights)
}

/// Vertex-edge-weighted Szeged index, `sum_e w'(e) n_1(e|(G,w)) n_2(e|(G,w))`.
pub fn szeged_weighted(gww: &VertexEdgeWeightedGraph) -> Result<u64> {
    let d = gww.graph.distance_matrix()?;
    weighted_szeged_from(&gww.graph, &d, &gww.vertex_weights, &gww.edge_weights)
}

/// Both weighted indices from a single distance matrix.
pub fn weighted_indices(gww: &VertexEdgeWeightedGraph) -> Result<IndexPair> {
    let d = gww.graph.distance_matrix()?;
    Ok(IndexPair {
        wiener: weighted_wiener_from(&d, &gww.vertex_weights)?,
        szeged: weighted_szeged_from(&gww.graph, &d, &gww.vertex_weights, &gww.edge_weights)?,
    })
}

/// Per-class terms of the cut formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutClassSummary {
    pub class: usize,
    /// Number of edges in the class.
    pub class_size: usize,
    /// Sum of the edge weights over the class (the class size when unweighted).
    pub edge_weight: u64,
    pub n1: u64,
    pub n2: u64,
    /// `n1 * n2`.
    pub wiener: u64,
    /// `edge_weight * n1 * n2`.
    pub szeged: u64,
}

/// Cut-formula terms for every Θ-class of `pc`, with optional vertex and edge
/// weights (default 1).
pub fn cut_summary(
    pc: &PartialCube,
    vertex_weights: Option<&[u64]>,
    edge_weights: Option<&[u64]>,
) -> Result<Vec<CutClassSummary>> {
    let g = pc.graph();
    if let Some(w) = vertex_weights {
        check_len("vertex", g.vertex_count(), w.len())?;
    }
    if let Some(w) = edge_weights {
        check_len("edge", g.edge_count(), w.len())?;
    }
    let mut out = Vec::with_capacity(pc.class_count());
    for (j, class) in pc.theta().classes().iter().enumerate() {
        let (n1, n2) = match vertex_weights {
            None => {
                let (a, b) = pc.side_sizes(j);
                (a as u64, b as u64)
            }
            Some(w) => {
                let (mut a, mut b) = (0u64, 0u64);
                for (v, &wv) in w.iter().enumerate() {
                    if pc.on_second_side(v, j) {
                        b = checked_add(b, wv)?;
                    } else {
                        a = checked_add(a, wv)?;
                    }
                }
                (a, b)
            }
        };
        let edge_weight = match edge_weights {
            None => class.len() as u64,
            Some(w) => class
                .iter()
                .try_fold(0u64, |acc, &e| checked_add(acc, w[e]))?,
        };
        let wiener = checked_mul(n1, n2)?;
        out.push(CutClassSummary {
            class: j,
            class_size: class.len(),
            edge_weight,
            n1,
            n2,
            wiener,
            szeged: checked_mul(edge_weight, wiener)?,
        });
    }
    Ok(out)
}

/// Both indices by the cut method, optionally weighted.
pub fn cut_indices(
    pc: &PartialCube,
    vertex_weights: Option<&[u64]>,
    edge_weights: Option<&[u64]>,
) -> Result<IndexPair> {
    cut_summary(pc, vertex_weights, edge_weights)?
        .iter()
        .try_fold(IndexPair::default(), |acc, s| {
            acc.checked_add(IndexPair {
                wiener: s.wiener,
                szeged: s.szeged,
            })
        })
}

/// `W(G) = sum_j n_1(E_j) n_2(E_j)`.
pub fn wiener_cut(pc: &PartialCube) -> Result<u64> {
    Ok(cut_indices(pc, None, None)?.wiener)
}

/// `Sz(G) = sum_j |E_j| n_1(E_j) n_2(E_j)`.
pub fn szeged_cut(pc: &PartialCube) -> Result<u64> {
    Ok(cut_indices(pc, None, None)?.szeged)
}

/// Per-group index contributions of a coarser partition: group `i`
/// contributes the weighted indices of `(G / F_i, w_i, w_i')`.
pub fn partition_contributions(
    pc: &PartialCube,
    cp: &CoarserPartition,
    vertex_weights: Option<&[u64]>,
    edge_weights: Option<&[u64]>,
) -> Result<Vec<IndexPair>> {
    (0..cp.len())
        .map(|i| {
            let wq = build_quotient_weighted(pc, cp, i, vertex_weights, edge_weights)?;
            weighted_indices(wq.weighted())
        })
        .collect()
}

/// Both indices as sums over the weighted quotients of `cp`.
pub fn partition_indices(
    pc: &PartialCube,
    cp: &CoarserPartition,
    vertex_weights: Option<&[u64]>,
    edge_weights: Option<&[u64]>,
) -> Result<IndexPair> {
    partition_contributions(pc, cp, vertex_weights, edge_weights)?
        .into_iter()
        .try_fold(IndexPair::default(), IndexPair::checked_add)
}

/// `W(G) = sum_i W(G / F_i, w_i)`.
pub fn wiener_via_partition(pc: &PartialCube, cp: &CoarserPartition) -> Result<u64> {
    Ok(partition_indices(pc, cp, None, None)?.wiener)
}

/// `Sz(G) = sum_i Sz(G / F_i, w_i, w_i')`.
pub fn szeged_via_partition(pc: &PartialCube, cp: &CoarserPartition) -> Result<u64> {
    Ok(partition_indices(pc, cp, None, None)?.szeged)
}
