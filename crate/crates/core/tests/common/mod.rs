#![allow(dead_code)]

use std::collections::BTreeSet;

use pcube::chem::{BenzenoidSpec, C4C8Spec, Cell};
use pcube::generators::tree_from_parents;
use pcube::quotient::{validate_coarser, CoarserPartition};
use pcube::{Graph, ThetaPartition};
use rand::seq::SliceRandom;
use rand::Rng;

pub const SIDE: [Cell; 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
pub const HEX: [Cell; 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

/// Uniform-ish random labelled tree on `n` vertices via random parents.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let parents: Vec<usize> = (1..n).map(|i| rng.gen_range(0..i)).collect();
    relabel(rng, &tree_from_parents(&parents))
}

/// Same graph with shuffled vertex ids and edge order.
pub fn relabel<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    let mut edges: Vec<(usize, usize)> =
        g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    edges.shuffle(rng);
    Graph::new(g.vertex_count(), &edges).unwrap()
}

/// Random tree by a Prüfer sequence, which gives more varied shapes than
/// random parents.
pub fn random_prufer_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n <= 2 {
        return random_tree(rng, n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}

fn normalize(cells: &BTreeSet<Cell>) -> BTreeSet<Cell> {
    let mi = cells.iter().map(|c| c.0).min().unwrap();
    let mj = cells.iter().map(|c| c.1).min().unwrap();
    cells.iter().map(|&(i, j)| (i - mi, j - mj)).collect()
}

/// All fixed polyominoes (translation classes of side-connected cell sets)
/// with exactly `k` cells.
pub fn fixed_polyominoes(k: usize) -> Vec<BTreeSet<Cell>> {
    let mut level: BTreeSet<BTreeSet<Cell>> = BTreeSet::from([BTreeSet::from([(0, 0)])]);
    for _ in 1..k {
        let mut next = BTreeSet::new();
        for shape in &level {
            for &(i, j) in shape {
                for &(di, dj) in &SIDE {
                    let c = (i + di, j + dj);
                    if !shape.contains(&c) {
                        let mut grown = shape.clone();
                        grown.insert(c);
                        next.insert(normalize(&grown));
                    }
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// Grows a connected cell set of `k` cells from the origin by random
/// neighbour additions.
pub fn grow_cells<R: Rng>(rng: &mut R, k: usize, neighbors: &[Cell]) -> BTreeSet<Cell> {
    let mut cells = BTreeSet::from([(0, 0)]);
    let mut order = vec![(0, 0)];
    while cells.len() < k {
        let &(i, j) = order.choose(rng).unwrap();
        let &(di, dj) = neighbors.choose(rng).unwrap();
        let c = (i + di, j + dj);
        if cells.insert(c) {
            order.push(c);
        }
    }
    cells
}

/// Random hole-free C4C8 cell set with `k` cells.
pub fn random_c4c8<R: Rng>(rng: &mut R, k: usize) -> C4C8Spec {
    loop {
        let spec = C4C8Spec::new(grow_cells(rng, k, &SIDE));
        if pcube::chem::build_c4c8(&spec).is_ok() {
            return spec;
        }
    }
}

/// Random hole-free benzenoid with `k` hexagons.
pub fn random_benzenoid<R: Rng>(rng: &mut R, k: usize) -> BenzenoidSpec {
    loop {
        let spec = BenzenoidSpec::new(grow_cells(rng, k, &HEX));
        if pcube::chem::build_benzenoid(&spec).is_ok() {
            return spec;
        }
    }
}

/// Random grouping of the classes into between 1 and `r` groups.
pub fn random_coarser<R: Rng>(rng: &mut R, theta: &ThetaPartition) -> CoarserPartition {
    let r = theta.len();
    if r == 0 {
        return CoarserPartition::coarsest(theta);
    }
    let k = rng.gen_range(1..=r);
    let mut classes: Vec<usize> = (0..r).collect();
    classes.shuffle(rng);
    let mut groups = vec![Vec::new(); k];
    // first k classes seed the groups so none is empty
    for (idx, &c) in classes.iter().enumerate() {
        let g = if idx < k { idx } else { rng.gen_range(0..k) };
        groups[g].push(c);
    }
    validate_coarser(theta, &groups).unwrap()
}

/// Floyd–Warshall all-pairs distances; `u32::MAX` marks no path.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    for row in &mut d {
        for x in row.iter_mut() {
            if *x >= inf {
                *x = u32::MAX;
            }
        }
    }
    d
}

/// Wiener index straight from Floyd–Warshall.
pub fn wiener_oracle(g: &Graph) -> u64 {
    let d = floyd_warshall(g);
    let n = g.vertex_count();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| d[u][v] as u64)
        .sum()
}

/// Szeged index straight from Floyd–Warshall.
pub fn szeged_oracle(g: &Graph) -> u64 {
    let d = floyd_warshall(g);
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let a = (0..g.vertex_count()).filter(|&x| d[x][u] < d[x][v]).count() as u64;
            let b = (0..g.vertex_count()).filter(|&x| d[x][v] < d[x][u]).count() as u64;
            a * b
        })
        .sum()
}

/// Djoković's criterion: a connected graph is a partial cube iff it is
/// bipartite and, for every edge `uv`, the set of vertices closer to `u` is
/// convex (and likewise for `v`).
pub fn djokovic_partial_cube(g: &Graph) -> bool {
    let n = g.vertex_count();
    let d = floyd_warshall(g);
    if d.iter().flatten().any(|&x| x == u32::MAX) {
        return false;
    }
    for &(u, v) in g.edges() {
        // bipartite iff no vertex is equidistant from the ends of an edge
        if (0..n).any(|x| d[x][u] == d[x][v]) {
            return false;
        }
        for side in [(u, v), (v, u)] {
            let w: Vec<usize> = (0..n).filter(|&x| d[x][side.0] < d[x][side.1]).collect();
            let inside: Vec<bool> = (0..n).map(|x| d[x][side.0] < d[x][side.1]).collect();
            for &a in &w {
                for &b in &w {
                    for x in 0..n {
                        if d[a][x] + d[x][b] == d[a][b] && !inside[x] {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Random connected graph: random tree plus `extra` random chords.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let tree = random_tree(rng, n);
    let mut edges: BTreeSet<(usize, usize)> = tree.edges().iter().copied().collect();
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::new(n, &edges).unwrap()
}
