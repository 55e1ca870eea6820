use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};

pub type Cell = (i64, i64);

/// Checks that `cells` is nonempty, connected under `adjacent` offsets, and
/// that every absent cell inside the bounding box reaches the outside through
/// absent cells under `gap` offsets.
pub(crate) fn validate_cells(
    cells: &BTreeSet<Cell>,
    adjacent: &[Cell],
    gap: &[Cell],
) -> Result<()> {
    let Some(&start) = cells.iter().next() else {
        return Err(Error::EmptyCells);
    };

    let mut seen = HashSet::with_capacity(cells.len());
    let mut queue = VecDeque::from([start]);
    seen.insert(start);
    while let Some((i, j)) = queue.pop_front() {
        for &(di, dj) in adjacent {
            let c = (i + di, j + dj);
            if cells.contains(&c) && seen.insert(c) {
                queue.push_back(c);
            }
        }
    }
    if let Some(&(i, j)) = cells.iter().find(|c| !seen.contains(c)) {
        return Err(Error::DisconnectedCells(i, j));
    }

    let (imin, imax) = cells.iter().fold((i64::MAX, i64::MIN), |(lo, hi), c| {
        (lo.min(c.0), hi.max(c.0))
    });
    let (jmin, jmax) = cells.iter().fold((i64::MAX, i64::MIN), |(lo, hi), c| {
        (lo.min(c.1), hi.max(c.1))
    });
    let (imin, imax, jmin, jmax) = (imin - 1, imax + 1, jmin - 1, jmax + 1);
    let inside = |(i, j): Cell| (imin..=imax).contains(&i) && (jmin..=jmax).contains(&j);

    let mut outside = HashSet::new();
    let corner = (imin, jmin);
    outside.insert(corner);
    let mut queue = VecDeque::from([corner]);
    while let Some((i, j)) = queue.pop_front() {
        for &(di, dj) in gap {
            let c = (i + di, j + dj);
            if inside(c) && !cells.contains(&c) && outside.insert(c) {
                queue.push_back(c);
            }
        }
    }
    for i in imin..=imax {
        for j in jmin..=jmax {
            if !cells.contains(&(i, j)) && !outside.contains(&(i, j)) {
                return Err(Error::CellsEncloseHole(i, j));
            }
        }
    }
    Ok(())
}
