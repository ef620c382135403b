//! Standard grid graphs and polyomino generators.

use std::collections::{BTreeSet, HashSet};

use rand::Rng;

use crate::lattice::{cells_form_simple_region, Cell, GridGraph, Vertex};

/// The `width` by `height` vertex rectangle with bottom-left corner at the origin.
pub fn rectangle(width: i64, height: i64) -> GridGraph {
    assert!(width >= 1 && height >= 1, "rectangle needs positive sides");
    GridGraph::induced((0..width).flat_map(|x| (0..height).map(move |y| Vertex::new(x, y))))
        .expect("non-empty")
}

/// Induced graph on `{|x| + |y| <= radius}`.
pub fn diamond(radius: i64) -> GridGraph {
    GridGraph::induced(
        (-radius..=radius)
            .flat_map(|x| (-radius..=radius).map(move |y| Vertex::new(x, y)))
            .filter(|p| p.x.abs() + p.y.abs() <= radius),
    )
    .expect("non-empty")
}

/// [`diamond`] with its four degree-one tips removed.
pub fn trimmed_diamond(radius: i64) -> GridGraph {
    let tips = [
        Vertex::new(radius, 0),
        Vertex::new(-radius, 0),
        Vertex::new(0, radius),
        Vertex::new(0, -radius),
    ];
    diamond(radius)
        .induced_subgraph(|p| !tips.contains(&p))
        .expect("non-empty")
}

/// The bounding cycle of an `n` by `n` block of cells, without the interior:
/// a cycle on `4n` vertices with no faces.
pub fn ring_cycle(n: i64) -> GridGraph {
    let on_ring = |p: &Vertex| p.x == 0 || p.y == 0 || p.x == n || p.y == n;
    let vertices: Vec<Vertex> = (0..=n)
        .flat_map(|x| (0..=n).map(move |y| Vertex::new(x, y)))
        .filter(on_ring)
        .collect();
    let edges: Vec<(Vertex, Vertex)> = vertices
        .iter()
        .flat_map(|&p| {
            let horizontal = (p.y == 0 || p.y == n) && p.x < n;
            let vertical = (p.x == 0 || p.x == n) && p.y < n;
            [
                horizontal.then(|| (p, p.right())),
                vertical.then(|| (p, p.up())),
            ]
        })
        .flatten()
        .collect();
    GridGraph::new(vertices, edges).expect("lattice cycle")
}

/// Translates a cell set so its minimum bottom-right coordinates are (1, 0).
fn normalize(cells: &BTreeSet<Cell>) -> BTreeSet<Cell> {
    let min_x = cells.iter().map(|c| c.bottom_right.x).min().unwrap_or(0);
    let min_y = cells.iter().map(|c| c.bottom_right.y).min().unwrap_or(0);
    cells
        .iter()
        .map(|c| Cell::new(c.bottom_right.offset(1 - min_x, -min_y)))
        .collect()
}

/// All fixed polyominoes (edge-connected cell sets up to translation) with
/// `1..=max_cells` cells, grouped by size.
pub fn enumerate_polyominoes(max_cells: usize) -> Vec<Vec<BTreeSet<Cell>>> {
    let mut by_size: Vec<Vec<BTreeSet<Cell>>> = Vec::new();
    if max_cells == 0 {
        return by_size;
    }
    by_size.push(vec![BTreeSet::from([Cell::new(Vertex::new(1, 0))])]);
    for _ in 1..max_cells {
        let mut next: HashSet<BTreeSet<Cell>> = HashSet::new();
        for poly in by_size.last().unwrap() {
            for cell in poly {
                for n in cell.edge_neighbors() {
                    if !poly.contains(&n) {
                        let mut grown = poly.clone();
                        grown.insert(n);
                        next.insert(normalize(&grown));
                    }
                }
            }
        }
        let mut next: Vec<_> = next.into_iter().collect();
        next.sort();
        by_size.push(next);
    }
    by_size
}

/// All simple grid graphs with `1..=max_faces` faces, up to translation.
pub fn enumerate_simple_graphs(max_faces: usize) -> Vec<GridGraph> {
    enumerate_polyominoes(max_faces)
        .into_iter()
        .flatten()
        .filter(cells_form_simple_region)
        .map(|cells| GridGraph::from_cells(cells).expect("non-empty"))
        .collect()
}

/// Grows a random simple polyomino with exactly `faces` cells by repeatedly
/// adding a uniformly chosen neighbouring cell, skipping additions that would
/// create a hole or a pinch.
pub fn random_simple_polyomino<R: Rng + ?Sized>(faces: usize, rng: &mut R) -> GridGraph {
    assert!(faces >= 1, "need at least one face");
    let mut cells = BTreeSet::from([Cell::new(Vertex::new(1, 0))]);
    while cells.len() < faces {
        let frontier: Vec<Cell> = cells
            .iter()
            .flat_map(|c| c.edge_neighbors())
            .filter(|n| !cells.contains(n))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let candidate = frontier[rng.random_range(0..frontier.len())];
        cells.insert(candidate);
        if !cells_form_simple_region(&cells) {
            cells.remove(&candidate);
        }
    }
    GridGraph::from_cells(cells).expect("non-empty")
}
