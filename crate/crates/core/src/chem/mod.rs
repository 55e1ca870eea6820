//! Planar chemical graphs: C4C8 systems and benzenoid systems.
//!
//! Both families are partial cubes whose Θ-classes are the elementary cuts of
//! the embedding: straight lines entering a face through one edge and leaving
//! through the opposite edge, from one peripheral edge to the next. Grouping
//! the cuts by edge direction gives a coarser partition whose quotients are
//! trees, so both indices follow in linear time from [`crate::treelin`].

mod benzenoid;
mod c4c8;
mod cells;
pub mod worked_example;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{Debug, Display};

pub use benzenoid::{build_benzenoid, BenzenoidSpec, HexDirection};
pub use c4c8::{build_c4c8, C4C8Direction, C4C8Spec};
pub use cells::Cell;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{checked_add, IndexPair};
use crate::quotient::{quotient_of_classes, validate_coarser, CoarserPartition, WeightedQuotient};
use crate::theta::ThetaPartition;
use crate::treelin::tree_indices;

/// Direction label of an embedded edge.
pub trait DirectionTag: Copy + Ord + Debug + Display {
    fn name(self) -> &'static str;
    /// Tag of an edge with the given lattice displacement.
    fn from_displacement(dx: i64, dy: i64) -> Self;
}

/// An embedded planar system: graph, per-edge direction, integer lattice
/// coordinates and the inner faces as cyclic lists of edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarSystem<T> {
    pub graph: Graph,
    pub tags: Vec<T>,
    pub coords: Vec<(i64, i64)>,
    pub faces: Vec<Vec<usize>>,
}

/// Turns faces given as cyclic vertex coordinates into a system. Vertices are
/// numbered in coordinate order and edges in order of their endpoint ids.
pub(crate) fn assemble<T: DirectionTag>(faces: &[Vec<Cell>]) -> PlanarSystem<T> {
    let coords: Vec<Cell> = faces
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let id: HashMap<Cell, usize> = coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();

    let mut edge_set = BTreeSet::new();
    for face in faces {
        for k in 0..face.len() {
            let (a, b) = (id[&face[k]], id[&face[(k + 1) % face.len()]]);
            edge_set.insert((a.min(b), a.max(b)));
        }
    }
    let edges: Vec<(usize, usize)> = edge_set.into_iter().collect();
    let edge_id: HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    let face_edges = faces
        .iter()
        .map(|face| {
            (0..face.len())
                .map(|k| {
                    let (a, b) = (id[&face[k]], id[&face[(k + 1) % face.len()]]);
                    edge_id[&(a.min(b), a.max(b))]
                })
                .collect()
        })
        .collect();
    let tags = edges
        .iter()
        .map(|&(u, v)| T::from_displacement(coords[v].0 - coords[u].0, coords[v].1 - coords[u].1))
        .collect();
    let graph = Graph::new(coords.len(), &edges).expect("lattice edges are simple");
    PlanarSystem {
        graph,
        tags,
        coords,
        faces: face_edges,
    }
}

/// Number of edges per direction, in tag order, omitting absent directions.
pub fn direction_counts<T: DirectionTag>(tags: &[T]) -> Vec<usize> {
    let mut counts: BTreeMap<T, usize> = BTreeMap::new();
    for &t in tags {
        *counts.entry(t).or_default() += 1;
    }
    counts.into_values().collect()
}

/// Θ-classes of a planar system obtained by walking its elementary cuts.
///
/// Every walk starts at an edge on exactly one face, crosses each face to the
/// opposite edge and stops at the next edge with no further face. Runs in
/// `O(n)` and never computes distances. An edge missed by every walk would
/// lie on a closed cut, which cannot happen for a hole-free system.
pub fn elementary_cuts<T>(sys: &PlanarSystem<T>) -> Result<ThetaPartition> {
    let m = sys.graph.edge_count();
    // (face, position within face) for each of the at most two faces of an edge
    let mut incidence: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for (f, face) in sys.faces.iter().enumerate() {
        for (k, &e) in face.iter().enumerate() {
            incidence[e].push((f, k));
        }
    }

    let mut class = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if class[start] != usize::MAX || incidence[start].len() != 1 {
            continue;
        }
        let id = classes.len();
        let mut members = vec![start];
        class[start] = id;
        let (mut face, mut pos) = incidence[start][0];
        loop {
            let len = sys.faces[face].len();
            let exit = sys.faces[face][(pos + len / 2) % len];
            if class[exit] == usize::MAX {
                class[exit] = id;
                members.push(exit);
            }
            match incidence[exit].iter().find(|&&(g, _)| g != face) {
                Some(&(g, k)) => {
                    face = g;
                    pos = k;
                }
                None => break,
            }
        }
        classes.push(members);
    }
    if let Some(edge) = class.iter().position(|&c| c == usize::MAX) {
        return Err(Error::ClosedCut { edge });
    }
    Ok(ThetaPartition::from_classes(m, classes))
}

/// Groups the Θ-classes by the direction of their edges.
///
/// Fails if a class mixes directions. Groups follow the tag order.
pub fn direction_partition<T: DirectionTag>(
    g: &Graph,
    tags: &[T],
    theta: &ThetaPartition,
) -> Result<CoarserPartition> {
    if tags.len() != g.edge_count() {
        return Err(Error::TagCount {
            expected: g.edge_count(),
            found: tags.len(),
        });
    }
    let mut by_tag: BTreeMap<T, Vec<usize>> = BTreeMap::new();
    for (j, class) in theta.classes().iter().enumerate() {
        let tag = tags[class[0]];
        if let Some(&edge) = class.iter().find(|&&e| tags[e] != tag) {
            return Err(Error::MixedDirection { class: j, edge });
        }
        by_tag.entry(tag).or_default().push(j);
    }
    let grouping: Vec<Vec<usize>> = by_tag.into_values().collect();
    validate_coarser(theta, &grouping)
}

/// Per-direction part of the linear-time pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionContribution<T> {
    pub direction: T,
    /// Number of Θ-classes with this direction.
    pub classes: usize,
    /// Vertices of the quotient tree.
    pub tree_vertices: usize,
    pub indices: IndexPair,
}

/// Output of [`system_indices`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport<T> {
    pub contributions: Vec<DirectionContribution<T>>,
    pub total: IndexPair,
}

/// Weighted quotient trees of a system, one per direction present.
pub fn direction_quotients<T: DirectionTag>(
    sys: &PlanarSystem<T>,
) -> Result<Vec<(T, WeightedQuotient)>> {
    let theta = elementary_cuts(sys)?;
    let cp = direction_partition(&sys.graph, &sys.tags, &theta)?;
    cp.groups()
        .iter()
        .enumerate()
        .map(|(i, group)| {
            let tag = sys.tags[theta.class(group[0])[0]];
            let wq = quotient_of_classes(&sys.graph, &theta, group, None, None)?;
            let q = wq.graph();
            if q.edge_count() + 1 != q.vertex_count() || !q.is_connected() {
                return Err(Error::QuotientNotTree { group: i });
            }
            Ok((tag, wq))
        })
        .collect()
}

/// Wiener and Szeged indices of a planar system in `O(n)`: elementary cuts,
/// direction grouping, one weighted quotient tree per direction, and the
/// linear tree sweep on each.
pub fn system_indices<T: DirectionTag>(sys: &PlanarSystem<T>) -> Result<PipelineReport<T>> {
    let mut contributions = Vec::new();
    let mut total = IndexPair::default();
    for (direction, wq) in direction_quotients(sys)? {
        let indices = tree_indices(wq.graph(), wq.vertex_weights(), Some(wq.edge_weights()))?;
        total = IndexPair {
            wiener: checked_add(total.wiener, indices.wiener)?,
            szeged: checked_add(total.szeged, indices.szeged)?,
        };
        contributions.push(DirectionContribution {
            direction,
            classes: wq.classes().len(),
            tree_vertices: wq.graph().vertex_count(),
            indices,
        });
    }
    Ok(PipelineReport {
        contributions,
        total,
    })
}

/// `(W, Sz)` of a C4C8 system via the four direction quotient trees.
pub fn c4c8_indices(spec: &C4C8Spec) -> Result<IndexPair> {
    Ok(system_indices(&build_c4c8(spec)?)?.total)
}

/// `(W, Sz)` of a benzenoid system via the three direction quotient trees.
pub fn benzenoid_indices(spec: &BenzenoidSpec) -> Result<IndexPair> {
    Ok(system_indices(&build_benzenoid(spec)?)?.total)
}
