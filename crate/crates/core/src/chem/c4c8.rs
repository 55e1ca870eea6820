//! C4C8 systems on the truncated-square (4.8.8) net.
//!
//! Octagon `(i, j)` is centred at `(4i, 4j)` with vertices at offsets
//! `(±1, ±2)` and `(±2, ±1)`. Side-adjacent octagons share a horizontal or
//! vertical edge; a square face appears where four octagons meet around
//! `(4i + 2, 4j + 2)`.

use std::collections::BTreeSet;
use std::fmt;

use super::cells::{validate_cells, Cell};
use super::{assemble, DirectionTag, PlanarSystem};
use crate::error::Result;

/// Edge direction in the 4.8.8 embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum C4C8Direction {
    Horizontal,
    Vertical,
    /// Slope +1.
    Diagonal,
    /// Slope -1.
    AntiDiagonal,
}

impl DirectionTag for C4C8Direction {
    fn name(self) -> &'static str {
        match self {
            C4C8Direction::Horizontal => "h",
            C4C8Direction::Vertical => "v",
            C4C8Direction::Diagonal => "d+",
            C4C8Direction::AntiDiagonal => "d-",
        }
    }

    fn from_displacement(dx: i64, dy: i64) -> Self {
        match (dx, dy) {
            (_, 0) => C4C8Direction::Horizontal,
            (0, _) => C4C8Direction::Vertical,
            _ if (dx > 0) == (dy > 0) => C4C8Direction::Diagonal,
            _ => C4C8Direction::AntiDiagonal,
        }
    }
}

impl fmt::Display for C4C8Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A C4C8 system given by its octagon cells.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct C4C8Spec {
    pub cells: BTreeSet<Cell>,
}

impl C4C8Spec {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Self {
        Self {
            cells: cells.into_iter().collect(),
        }
    }

    /// `width x height` block of octagons with its lower-left cell at the
    /// origin.
    pub fn rectangle(width: i64, height: i64) -> Self {
        Self::new((0..width).flat_map(|i| (0..height).map(move |j| (i, j))))
    }
}

const SIDE: [Cell; 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
const AROUND: [Cell; 8] = [
    (1, 0),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, 1),
    (1, -1),
    (-1, 1),
    (-1, -1),
];

/// Octagon vertex offsets in counter-clockwise order.
const OCTAGON: [Cell; 8] = [
    (2, 1),
    (1, 2),
    (-1, 2),
    (-2, 1),
    (-2, -1),
    (-1, -2),
    (1, -2),
    (2, -1),
];

/// Builds the graph, direction tags, coordinates and faces of a C4C8 system.
///
/// The cell set must be side-connected and must not enclose empty cells.
pub fn build_c4c8(spec: &C4C8Spec) -> Result<PlanarSystem<C4C8Direction>> {
    // Empty cells touching only diagonally still communicate through the
    // open square between them, hence 8-connectivity for gaps.
    validate_cells(&spec.cells, &SIDE, &AROUND)?;

    let mut faces: Vec<Vec<(i64, i64)>> = Vec::new();
    for &(i, j) in &spec.cells {
        let (cx, cy) = (4 * i, 4 * j);
        faces.push(OCTAGON.iter().map(|&(dx, dy)| (cx + dx, cy + dy)).collect());
    }
    for &(i, j) in &spec.cells {
        let full = [(i + 1, j), (i, j + 1), (i + 1, j + 1)]
            .iter()
            .all(|c| spec.cells.contains(c));
        if full {
            let (cx, cy) = (4 * i + 2, 4 * j + 2);
            faces.push(vec![(cx, cy - 1), (cx + 1, cy), (cx, cy + 1), (cx - 1, cy)]);
        }
    }
    Ok(assemble(&faces))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chem::direction_counts;

    #[test]
    fn single_octagon() {
        let sys = build_c4c8(&C4C8Spec::new([(0, 0)])).unwrap();
        assert_eq!(sys.graph.vertex_count(), 8);
        assert_eq!(sys.graph.edge_count(), 8);
        assert_eq!(direction_counts(&sys.tags), vec![2, 2, 2, 2]);
        assert_eq!(sys.faces.len(), 1);
    }

    #[test]
    fn two_horizontal_cells_share_a_vertical_edge() {
        let sys = build_c4c8(&C4C8Spec::new([(0, 0), (1, 0)])).unwrap();
        assert_eq!((sys.graph.vertex_count(), sys.graph.edge_count()), (14, 15));
        assert_eq!(direction_counts(&sys.tags), vec![4, 3, 4, 4]);
    }

    #[test]
    fn block_has_central_square() {
        let sys = build_c4c8(&C4C8Spec::rectangle(2, 2)).unwrap();
        assert_eq!((sys.graph.vertex_count(), sys.graph.edge_count()), (24, 28));
        // octagons plus one square
        assert_eq!(sys.faces.len(), 5);
        let square = sys.faces.iter().find(|f| f.len() == 4).unwrap();
        let pts: BTreeSet<_> = square
            .iter()
            .flat_map(|&e| {
                let (u, v) = sys.graph.edge(e);
                [sys.coords[u], sys.coords[v]]
            })
            .collect();
        assert_eq!(pts, BTreeSet::from([(2, 1), (3, 2), (2, 3), (1, 2)]));
        // Euler: V - E + F = 2 with the outer face.
        let v = sys.graph.vertex_count() as i64;
        let e = sys.graph.edge_count() as i64;
        assert_eq!(v - e + sys.faces.len() as i64 + 1, 2);
    }

    #[test]
    fn rejects_disconnected_and_holes() {
        assert!(build_c4c8(&C4C8Spec::new([(0, 0), (1, 1)])).is_err());
        let ring = C4C8Spec::new(
            C4C8Spec::rectangle(3, 3)
                .cells
                .into_iter()
                .filter(|&c| c != (1, 1)),
        );
        assert!(build_c4c8(&ring).is_err());
    }
}
