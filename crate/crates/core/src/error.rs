use thiserror::Error;

use crate::theta::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} is a self-loop at vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },

    #[error("edge {edge} ({u}, {v}) duplicates edge {first}")]
    DuplicateEdge {
        edge: usize,
        first: usize,
        u: usize,
        v: usize,
    },

    #[error("edge {edge} has endpoint {vertex} outside 0..{vertex_count}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },

    #[error("vertex {vertex} is outside 0..{vertex_count}")]
    InvalidVertex { vertex: usize, vertex_count: usize },

    #[error("edge index {index} is outside 0..{edge_count}")]
    InvalidEdgeIndex { index: usize, edge_count: usize },

    #[error("graph is disconnected: no path between vertices {u} and {v}")]
    Disconnected { u: usize, v: usize },

    #[error("expected {expected} {what} weights, found {found}")]
    WeightCount {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("integer overflow while accumulating an index")]
    Overflow,

    #[error("not a partial cube: {0}")]
    NotPartialCube(Witness),

    #[error("not a tree: {vertices} vertices and {edges} edges")]
    NotATree { vertices: usize, edges: usize },

    #[error("grouping refers to class {class}, but there are only {class_count} classes")]
    ClassOutOfRange { class: usize, class_count: usize },

    #[error("class {class} appears in more than one group")]
    DuplicateClass { class: usize },

    #[error("class {class} is not covered by any group")]
    MissingClass { class: usize },

    #[error("group {group} is empty")]
    EmptyGroup { group: usize },

    #[error("group index {group} is outside 0..{group_count}")]
    GroupOutOfRange { group: usize, group_count: usize },

    #[error("edge {edge} has a direction tag different from the rest of class {class}")]
    MixedDirection { class: usize, edge: usize },

    #[error("expected {expected} direction tags, found {found}")]
    TagCount { expected: usize, found: usize },

    #[error("cell set is empty")]
    EmptyCells,

    #[error("cell ({0}, {1}) is not connected to the rest of the cell set")]
    DisconnectedCells(i64, i64),

    #[error("cell set encloses a hole at ({0}, {1})")]
    CellsEncloseHole(i64, i64),

    #[error("edge {edge} is not reached by any elementary cut")]
    ClosedCut { edge: usize },

    #[error("quotient graph of group {group} is not a tree")]
    QuotientNotTree { group: usize },
}
