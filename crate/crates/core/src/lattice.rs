//! Grid graphs: finite subgraphs of the square lattice, their faces, boundary
//! and the words-on-a-page vertex order.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A point of the integer lattice.
///
/// The ordering is words-on-a-page: rows from top to bottom, each row left to
/// right. `u < v` iff `u.y > v.y`, or `u.y == v.y` and `u.x < v.x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub x: i64,
    pub y: i64,
}

impl Vertex {
    pub const fn new(x: i64, y: i64) -> Self {
        Vertex { x, y }
    }

    pub const fn offset(self, dx: i64, dy: i64) -> Self {
        Vertex::new(self.x + dx, self.y + dy)
    }

    pub const fn up(self) -> Self {
        self.offset(0, 1)
    }

    pub const fn down(self) -> Self {
        self.offset(0, -1)
    }

    pub const fn left(self) -> Self {
        self.offset(-1, 0)
    }

    pub const fn right(self) -> Self {
        self.offset(1, 0)
    }

    pub fn lattice_neighbors(self) -> [Vertex; 4] {
        [self.up(), self.left(), self.right(), self.down()]
    }

    pub fn is_adjacent(self, other: Vertex) -> bool {
        (self.x - other.x).abs() + (self.y - other.y).abs() == 1
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        other.y.cmp(&self.y).then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Vertex {
    fn from((x, y): (i64, i64)) -> Self {
        Vertex::new(x, y)
    }
}

/// An undirected lattice edge, stored with its endpoints in vertex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Result<Self> {
        if !a.is_adjacent(b) {
            return Err(Error::NotLatticeEdge(a, b));
        }
        Ok(Self::ordered(a, b))
    }

    fn ordered(a: Vertex, b: Vertex) -> Self {
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn first(&self) -> Vertex {
        self.0
    }

    pub fn second(&self) -> Vertex {
        self.1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// The unit square of the lattice whose bottom-right corner is `bottom_right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub bottom_right: Vertex,
}

impl Cell {
    pub const fn new(bottom_right: Vertex) -> Self {
        Cell { bottom_right }
    }

    /// Corners as bottom-right, bottom-left, top-left, top-right.
    pub fn corners(&self) -> [Vertex; 4] {
        let v = self.bottom_right;
        [v, v.left(), v.left().up(), v.up()]
    }

    pub fn edges(&self) -> [Edge; 4] {
        let [br, bl, tl, tr] = self.corners();
        [
            Edge::ordered(bl, br),
            Edge::ordered(tl, tr),
            Edge::ordered(bl, tl),
            Edge::ordered(br, tr),
        ]
    }

    /// Cells sharing an edge with this one.
    pub fn edge_neighbors(&self) -> [Cell; 4] {
        self.bottom_right.lattice_neighbors().map(Cell::new)
    }
}

/// A finite subgraph of the square lattice. Connectivity is not required.
#[derive(Clone)]
pub struct GridGraph {
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    edges: BTreeSet<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl GridGraph {
    /// Builds a graph from an explicit vertex set and edge set.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let vertex_set: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            for endpoint in [a, b] {
                if !vertex_set.contains(&endpoint) {
                    return Err(Error::MissingEndpoint(endpoint));
                }
            }
            edge_set.insert(Edge::new(a, b)?);
        }
        Self::from_parts(vertex_set, edge_set)
    }

    /// The graph induced on `vertices` by the lattice.
    pub fn induced<V>(vertices: V) -> Result<Self>
    where
        V: IntoIterator<Item = Vertex>,
    {
        let vertex_set: BTreeSet<Vertex> = vertices.into_iter().collect();
        let edges = lattice_edges_within(&vertex_set);
        Self::from_parts(vertex_set, edges)
    }

    /// The union of the corners and sides of `cells`.
    pub fn from_cells<C>(cells: C) -> Result<Self>
    where
        C: IntoIterator<Item = Cell>,
    {
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for cell in cells {
            vertices.extend(cell.corners());
            edges.extend(cell.edges());
        }
        Self::from_parts(vertices, edges)
    }

    fn from_parts(vertex_set: BTreeSet<Vertex>, edges: BTreeSet<Edge>) -> Result<Self> {
        if vertex_set.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let vertices: Vec<Vertex> = vertex_set.into_iter().collect();
        let index: HashMap<Vertex, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for e in &edges {
            let (a, b) = (index[&e.first()], index[&e.second()]);
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(GridGraph {
            vertices,
            index,
            edges,
            adjacency,
        })
    }

    /// Vertices in words-on-a-page order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index.contains_key(&v)
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn vertex(&self, i: usize) -> Vertex {
        self.vertices[i]
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a.is_adjacent(b) && self.edges.contains(&Edge::ordered(a, b))
    }

    /// Neighbor indices of vertex index `i`, ascending.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    /// True when the graph equals the lattice-induced graph on its vertices.
    pub fn is_induced(&self) -> bool {
        let all: BTreeSet<Vertex> = self.vertices.iter().copied().collect();
        lattice_edges_within(&all) == self.edges
    }

    /// Subgraph induced, within this graph's own edges, by the vertices
    /// satisfying `keep`. `None` when no vertex is kept.
    pub fn induced_subgraph<F>(&self, keep: F) -> Option<GridGraph>
    where
        F: Fn(Vertex) -> bool,
    {
        let vertices: BTreeSet<Vertex> = self.vertices.iter().copied().filter(|&v| keep(v)).collect();
        if vertices.is_empty() {
            return None;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| vertices.contains(&e.first()) && vertices.contains(&e.second()))
            .copied()
            .collect();
        Self::from_parts(vertices, edges).ok()
    }

    /// Subgraph induced by the given vertex indices.
    pub fn subgraph_from_indices(&self, indices: &[usize]) -> GridGraph {
        let keep: HashSet<Vertex> = indices.iter().map(|&i| self.vertices[i]).collect();
        self.induced_subgraph(|v| keep.contains(&v))
            .expect("index list must be non-empty")
    }

    /// Connected components as ascending index lists, ordered by their first vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Index list of the component containing vertex index `i`.
    pub fn component_of(&self, i: usize) -> Vec<usize> {
        let mut seen = vec![false; self.vertices.len()];
        seen[i] = true;
        let mut comp = vec![i];
        let mut queue = VecDeque::from([i]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.vertices.len()
    }

    /// Applies a lattice map to every vertex. The map must send rook-adjacent
    /// pairs to rook-adjacent pairs.
    pub fn map_vertices<F>(&self, f: F) -> Result<GridGraph>
    where
        F: Fn(Vertex) -> Vertex,
    {
        GridGraph::new(
            self.vertices.iter().map(|&v| f(v)),
            self.edges.iter().map(|e| (f(e.first()), f(e.second()))),
        )
    }

    pub fn translate(&self, dx: i64, dy: i64) -> GridGraph {
        self.map_vertices(|v| v.offset(dx, dy))
            .expect("translation preserves lattice edges")
    }

    pub fn has_cell(&self, cell: Cell) -> bool {
        cell.corners().iter().all(|&c| self.contains(c))
            && cell.edges().iter().all(|e| self.edges.contains(e))
    }

    /// Cells whose four corners and four sides all belong to the graph.
    pub fn faces(&self) -> BTreeSet<Cell> {
        self.vertices
            .iter()
            .map(|&v| Cell::new(v))
            .filter(|&c| self.has_cell(c))
            .collect()
    }

    /// Number of faces.
    pub fn area(&self) -> usize {
        self.faces().len()
    }

    /// Vertices `v` whose cell with bottom-right corner `v` is not contained
    /// in the graph.
    pub fn top_left_boundary(&self) -> BTreeSet<Vertex> {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| !self.has_cell(Cell::new(v)))
            .collect()
    }

    pub fn check_simple(&self) -> SimplicityReport {
        let faces = self.faces();
        let area = faces.len();
        let not_simple = |boundary_size| SimplicityReport {
            is_simple: false,
            boundary_loop: Vec::new(),
            boundary_size,
            area,
        };
        let face_boundary = boundary_edges(&faces);
        if faces.is_empty() {
            return not_simple(0);
        }
        match GridGraph::from_cells(faces.iter().copied()) {
            Ok(rebuilt) if rebuilt == *self => {}
            _ => return not_simple(face_boundary.len()),
        }
        if !cells_connected(&faces) || has_hole(&faces) || has_pinch(self, &faces) {
            return not_simple(face_boundary.len());
        }
        match trace_loop(&face_boundary) {
            Some(boundary_loop) => SimplicityReport {
                is_simple: true,
                boundary_size: boundary_loop.len(),
                boundary_loop,
                area,
            },
            None => not_simple(face_boundary.len()),
        }
    }

    /// Vertices incident to fewer than four faces. For a simple graph this is
    /// the vertex set of its bounding loop.
    pub fn boundary_vertices(&self) -> BTreeSet<Vertex> {
        let faces = self.faces();
        self.vertices
            .iter()
            .copied()
            .filter(|&p| incident_cells(p).iter().filter(|c| faces.contains(c)).count() < 4)
            .collect()
    }

    /// Checks `|top-left boundary| = |boundary| / 2 + 1` and containment.
    pub fn boundary_identity_check(&self) -> Result<BoundaryIdentity> {
        let report = self.check_simple();
        if !report.is_simple {
            return Err(Error::NotSimple);
        }
        let top_left = self.top_left_boundary();
        let boundary: BTreeSet<Vertex> = report.boundary_loop.iter().copied().collect();
        let contained = top_left.is_subset(&boundary);
        let holds = contained
            && report.boundary_size.is_multiple_of(2)
            && top_left.len() == report.boundary_size / 2 + 1;
        Ok(BoundaryIdentity {
            top_left_size: top_left.len(),
            boundary_size: report.boundary_size,
            contained,
            holds,
        })
    }
}

impl PartialEq for GridGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for GridGraph {}

impl fmt::Debug for GridGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GridGraph")
            .field("vertices", &self.vertices.len())
            .field("edges", &self.edges.len())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityReport {
    pub is_simple: bool,
    /// Traced bounding loop; empty unless `is_simple`.
    pub boundary_loop: Vec<Vertex>,
    /// Loop length when simple, otherwise the number of face-boundary edges.
    pub boundary_size: usize,
    pub area: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryIdentity {
    pub top_left_size: usize,
    pub boundary_size: usize,
    pub contained: bool,
    pub holds: bool,
}

fn lattice_edges_within(vertices: &BTreeSet<Vertex>) -> BTreeSet<Edge> {
    let mut edges = BTreeSet::new();
    for &v in vertices {
        for w in [v.right(), v.down()] {
            if vertices.contains(&w) {
                edges.insert(Edge::ordered(v, w));
            }
        }
    }
    edges
}

/// The four cells having `p` as a corner: `p` is respectively their
/// bottom-right, bottom-left, top-right and top-left corner.
fn incident_cells(p: Vertex) -> [Cell; 4] {
    [
        Cell::new(p),
        Cell::new(p.right()),
        Cell::new(p.down()),
        Cell::new(p.right().down()),
    ]
}

/// Cell sides that belong to exactly one cell of `cells`.
fn boundary_edges(cells: &BTreeSet<Cell>) -> BTreeSet<Edge> {
    let mut count: HashMap<Edge, usize> = HashMap::new();
    for cell in cells {
        for e in cell.edges() {
            *count.entry(e).or_default() += 1;
        }
    }
    count
        .into_iter()
        .filter(|&(_, c)| c == 1)
        .map(|(e, _)| e)
        .collect()
}

fn cells_connected(cells: &BTreeSet<Cell>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return true;
    };
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for n in c.edge_neighbors() {
            if cells.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == cells.len()
}

/// True when some non-member cell cannot reach the unbounded region through
/// edge-adjacent non-member cells.
fn has_hole(cells: &BTreeSet<Cell>) -> bool {
    let xs = cells.iter().map(|c| c.bottom_right.x);
    let ys = cells.iter().map(|c| c.bottom_right.y);
    let (min_x, max_x) = (xs.clone().min().unwrap() - 1, xs.max().unwrap() + 1);
    let (min_y, max_y) = (ys.clone().min().unwrap() - 1, ys.max().unwrap() + 1);
    let in_box = |c: Cell| {
        (min_x..=max_x).contains(&c.bottom_right.x) && (min_y..=max_y).contains(&c.bottom_right.y)
    };
    let start = Cell::new(Vertex::new(min_x, min_y));
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for n in c.edge_neighbors() {
            if in_box(n) && !cells.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    let box_cells = ((max_x - min_x + 1) * (max_y - min_y + 1)) as usize;
    seen.len() + cells.len() != box_cells
}

fn has_pinch(g: &GridGraph, cells: &BTreeSet<Cell>) -> bool {
    g.vertices().iter().any(|&p| is_pinch(p, cells))
}

/// Exactly two of the four cells at `p` are present, diagonally opposite.
fn is_pinch(p: Vertex, cells: &BTreeSet<Cell>) -> bool {
    let [br, bl, tr, tl] = incident_cells(p).map(|c| cells.contains(&c));
    (br && tl && !bl && !tr) || (bl && tr && !br && !tl)
}

/// Whether a non-empty cell set is edge-connected, hole-free and pinch-free,
/// i.e. whether the graph built from it is simple.
pub(crate) fn cells_form_simple_region(cells: &BTreeSet<Cell>) -> bool {
    !cells.is_empty()
        && cells_connected(cells)
        && !has_hole(cells)
        && !cells
            .iter()
            .flat_map(|c| c.corners())
            .any(|p| is_pinch(p, cells))
}

/// Traces the boundary edges as one closed loop, starting at the first vertex
/// in words-on-a-page order. `None` unless they form a single simple cycle.
fn trace_loop(edges: &BTreeSet<Edge>) -> Option<Vec<Vertex>> {
    let mut adjacent: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for e in edges {
        adjacent.entry(e.first()).or_default().push(e.second());
        adjacent.entry(e.second()).or_default().push(e.first());
    }
    if adjacent.len() < 3 || adjacent.values().any(|n| n.len() != 2) {
        return None;
    }
    let start = *adjacent.keys().min()?;
    let mut path = vec![start];
    let mut prev = start;
    let mut current = *adjacent[&start].iter().min()?;
    while current != start {
        path.push(current);
        let next = adjacent[&current].iter().copied().find(|&n| n != prev)?;
        prev = current;
        current = next;
    }
    (path.len() == adjacent.len()).then_some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    fn v(x: i64, y: i64) -> Vertex {
        Vertex::new(x, y)
    }

    #[test]
    fn words_on_a_page_order() {
        let mut vs = vec![v(1, 0), v(0, 0), v(1, 1), v(0, 1)];
        vs.sort();
        assert_eq!(vs, vec![v(0, 1), v(1, 1), v(0, 0), v(1, 0)]);
    }

    #[test]
    fn induced_examples() {
        let square = GridGraph::induced([v(0, 0), v(1, 0), v(0, 1), v(1, 1)]).unwrap();
        assert_eq!((square.num_vertices(), square.num_edges()), (4, 4));
        let apart = GridGraph::induced([v(0, 0), v(2, 0)]).unwrap();
        assert_eq!((apart.num_vertices(), apart.num_edges()), (2, 0));
        let big = shapes::rectangle(12, 12);
        assert_eq!((big.num_vertices(), big.num_edges()), (144, 2 * 12 * 11));
        assert_eq!(GridGraph::induced([]).unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn rejects_bad_edges() {
        let err = GridGraph::new([v(0, 0), v(1, 1)], [(v(0, 0), v(1, 1))]).unwrap_err();
        assert_eq!(err, Error::NotLatticeEdge(v(0, 0), v(1, 1)));
        let err = GridGraph::new([v(0, 0)], [(v(0, 0), v(1, 0))]).unwrap_err();
        assert_eq!(err, Error::MissingEndpoint(v(1, 0)));
    }

    #[test]
    fn faces_and_area() {
        assert_eq!(shapes::rectangle(2, 2).area(), 1);
        assert_eq!(shapes::rectangle(12, 12).faces().len(), 121);
        assert_eq!(shapes::ring_cycle(2).area(), 0);
        assert_eq!(shapes::diamond(8).area(), 112);
    }

    #[test]
    fn top_left_boundary_examples() {
        assert_eq!(shapes::rectangle(12, 12).top_left_boundary().len(), 23);
        assert_eq!(shapes::diamond(8).top_left_boundary().len(), 33);
        let single = GridGraph::induced([v(3, -2)]).unwrap();
        assert_eq!(single.top_left_boundary(), BTreeSet::from([v(3, -2)]));
    }

    #[test]
    fn simplicity_examples() {
        let square = shapes::rectangle(12, 12).check_simple();
        assert!(square.is_simple);
        assert_eq!(square.boundary_size, 44);
        assert_eq!(square.area, 121);

        assert!(!shapes::diamond(8).check_simple().is_simple);
        let trimmed = shapes::trimmed_diamond(8);
        let report = trimmed.check_simple();
        assert!(report.is_simple);
        assert_eq!(report.boundary_size, 56);

        let pinched = GridGraph::from_cells([Cell::new(v(1, 0)), Cell::new(v(2, -1))]).unwrap();
        assert_eq!(pinched.num_vertices(), 7);
        assert!(!pinched.check_simple().is_simple);

        for degenerate in [
            GridGraph::induced([v(0, 0)]).unwrap(),
            GridGraph::induced([v(0, 0), v(1, 0), v(2, 0)]).unwrap(),
            shapes::ring_cycle(2),
        ] {
            assert!(!degenerate.check_simple().is_simple);
        }
    }

    #[test]
    fn missing_interior_edge_is_not_simple() {
        let square = shapes::rectangle(3, 3);
        let edges = square
            .edges()
            .iter()
            .filter(|e| **e != Edge::new(v(1, 1), v(1, 2)).unwrap())
            .map(|e| (e.first(), e.second()));
        let cut = GridGraph::new(square.vertices().iter().copied(), edges).unwrap();
        assert!(!cut.check_simple().is_simple);
    }

    #[test]
    fn hole_is_not_simple() {
        // a one-cell hole would be filled in by its four sides, so use 2x2
        let ring: Vec<Cell> = (1..5)
            .flat_map(|x| (0..4).map(move |y| Cell::new(v(x, y))))
            .filter(|c| !(2..4).contains(&c.bottom_right.x) || !(1..3).contains(&c.bottom_right.y))
            .collect();
        let g = GridGraph::from_cells(ring).unwrap();
        assert_eq!(g.area(), 12);
        assert!(!g.check_simple().is_simple);
    }

    #[test]
    fn boundary_loop_is_closed_lattice_cycle() {
        let report = shapes::trimmed_diamond(5).check_simple();
        let lp = &report.boundary_loop;
        assert!(lp.len() > 2);
        let distinct: BTreeSet<_> = lp.iter().collect();
        assert_eq!(distinct.len(), lp.len());
        for i in 0..lp.len() {
            assert!(lp[i].is_adjacent(lp[(i + 1) % lp.len()]));
        }
    }

    #[test]
    fn boundary_identity_examples() {
        let square = shapes::rectangle(12, 12).boundary_identity_check().unwrap();
        assert_eq!((square.top_left_size, square.boundary_size), (23, 44));
        assert!(square.holds);
        let unit = shapes::rectangle(2, 2).boundary_identity_check().unwrap();
        assert_eq!((unit.top_left_size, unit.boundary_size), (3, 4));
        assert!(unit.holds);
        let diamond = shapes::trimmed_diamond(8).boundary_identity_check().unwrap();
        assert_eq!((diamond.top_left_size, diamond.boundary_size), (29, 56));
        assert!(diamond.holds);
        assert_eq!(
            shapes::ring_cycle(2).boundary_identity_check().unwrap_err(),
            Error::NotSimple
        );
    }

    #[test]
    fn induced_subgraph_keeps_own_edges() {
        let g = shapes::ring_cycle(2);
        let sub = g.induced_subgraph(|p| p.y >= 1).unwrap();
        assert_eq!(sub.num_vertices(), 5);
        // the cycle has no edge through the removed centre
        assert_eq!(sub.num_edges(), 4);
        assert!(g.induced_subgraph(|_| false).is_none());
    }
}
