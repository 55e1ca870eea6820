//! Benzenoid systems on the hexagonal net.
//!
//! Coordinates use the basis `a = (1, 0)`, `b = (1/2, sqrt(3)/2)` of unit
//! vectors, so every vertex is an integer pair. Hexagon `(q, r)` in axial
//! coordinates is centred at `(q - r, q + 2r)` and has vertices at offsets
//! `(1,0) (0,1) (-1,1) (-1,0) (0,-1) (1,-1)`.

use std::collections::BTreeSet;
use std::fmt;

use super::cells::{validate_cells, Cell};
use super::{assemble, DirectionTag, PlanarSystem};
use crate::error::Result;

/// Edge direction in the hexagonal embedding, by angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HexDirection {
    Deg0,
    Deg60,
    Deg120,
}

impl DirectionTag for HexDirection {
    fn name(self) -> &'static str {
        match self {
            HexDirection::Deg0 => "d0",
            HexDirection::Deg60 => "d60",
            HexDirection::Deg120 => "d120",
        }
    }

    fn from_displacement(dx: i64, dy: i64) -> Self {
        match (dx, dy) {
            (_, 0) => HexDirection::Deg0,
            (0, _) => HexDirection::Deg60,
            _ => HexDirection::Deg120,
        }
    }
}

impl fmt::Display for HexDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A benzenoid system given by axial hexagon coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BenzenoidSpec {
    pub cells: BTreeSet<Cell>,
}

impl BenzenoidSpec {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Self {
        Self {
            cells: cells.into_iter().collect(),
        }
    }

    /// `k` hexagons in a row (acenes).
    pub fn linear(k: i64) -> Self {
        Self::new((0..k).map(|q| (q, 0)))
    }
}

pub(crate) const HEX_NEIGHBORS: [Cell; 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];
const HEXAGON: [Cell; 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Builds the graph, direction tags, coordinates and faces of a benzenoid
/// system. The hexagons must be connected and must not enclose a hole.
pub fn build_benzenoid(spec: &BenzenoidSpec) -> Result<PlanarSystem<HexDirection>> {
    validate_cells(&spec.cells, &HEX_NEIGHBORS, &HEX_NEIGHBORS)?;
    let faces: Vec<Vec<Cell>> = spec
        .cells
        .iter()
        .map(|&(q, r)| {
            let (cx, cy) = (q - r, q + 2 * r);
            HEXAGON.iter().map(|&(dx, dy)| (cx + dx, cy + dy)).collect()
        })
        .collect();
    Ok(assemble(&faces))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chem::direction_counts;

    #[test]
    fn acenes() {
        let benzene = build_benzenoid(&BenzenoidSpec::linear(1)).unwrap();
        assert_eq!(
            (benzene.graph.vertex_count(), benzene.graph.edge_count()),
            (6, 6)
        );
        assert_eq!(direction_counts(&benzene.tags), vec![2, 2, 2]);
        let naphthalene = build_benzenoid(&BenzenoidSpec::linear(2)).unwrap();
        assert_eq!(
            (
                naphthalene.graph.vertex_count(),
                naphthalene.graph.edge_count()
            ),
            (10, 11)
        );
        let anthracene = build_benzenoid(&BenzenoidSpec::linear(3)).unwrap();
        assert_eq!(
            (
                anthracene.graph.vertex_count(),
                anthracene.graph.edge_count()
            ),
            (14, 16)
        );
    }

    #[test]
    fn every_neighbor_shares_one_edge() {
        for &n in &HEX_NEIGHBORS {
            let sys = build_benzenoid(&BenzenoidSpec::new([(0, 0), n])).unwrap();
            assert_eq!(
                (sys.graph.vertex_count(), sys.graph.edge_count()),
                (10, 11),
                "{n:?}"
            );
        }
    }

    #[test]
    fn coronene_ring_is_rejected() {
        let ring = BenzenoidSpec::new(HEX_NEIGHBORS);
        assert!(build_benzenoid(&ring).is_err());
    }
}
