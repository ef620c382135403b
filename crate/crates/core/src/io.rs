//! Text formats for grid graphs and district assignments.
//!
//! A grid file has one record per line: `v x y` declares a vertex and
//! `e x1 y1 x2 y2` an edge. Without any `e` line the graph is induced on its
//! vertices. A partition file has lines `x y district`. In both, `#` starts a
//! comment line and blank lines are skipped.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::districting::DistrictPartition;
use crate::error::{Error, Result};
use crate::lattice::{Edge, GridGraph, Vertex};

fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        (!line.is_empty() && !line.starts_with('#')).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn integers<T: std::str::FromStr>(line: usize, fields: &[&str]) -> Result<Vec<T>> {
    fields
        .iter()
        .map(|f| f.parse().map_err(|_| parse_error(line, format!("not an integer: {f:?}"))))
        .collect()
}

pub fn parse_grid(text: &str) -> Result<GridGraph> {
    let mut vertices = BTreeSet::new();
    let mut edges: Vec<(usize, Edge)> = Vec::new();
    for (line, fields) in records(text) {
        match fields.as_slice() {
            ["v", rest @ ..] if rest.len() == 2 => {
                let c: Vec<i64> = integers(line, rest)?;
                vertices.insert(Vertex::new(c[0], c[1]));
            }
            ["e", rest @ ..] if rest.len() == 4 => {
                let c: Vec<i64> = integers(line, rest)?;
                let edge = Edge::new(Vertex::new(c[0], c[1]), Vertex::new(c[2], c[3]))
                    .map_err(|e| parse_error(line, e.to_string()))?;
                edges.push((line, edge));
            }
            _ => return Err(parse_error(line, "expected `v x y` or `e x1 y1 x2 y2`")),
        }
    }
    if vertices.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if edges.is_empty() {
        return GridGraph::induced(vertices);
    }
    for (line, e) in &edges {
        if let Some(&p) = [e.first(), e.second()].iter().find(|p| !vertices.contains(p)) {
            return Err(parse_error(*line, Error::MissingEndpoint(p).to_string()));
        }
    }
    GridGraph::new(vertices, edges.into_iter().map(|(_, e)| (e.first(), e.second())))
}

/// Inverse of [`parse_grid`]. Edge lines are written only when the graph is
/// not induced; a non-induced graph without edges has no representation.
pub fn write_grid(g: &GridGraph) -> Result<String> {
    let mut out = String::new();
    for v in g.vertices() {
        let _ = writeln!(out, "v {} {}", v.x, v.y);
    }
    if !g.is_induced() {
        if g.num_edges() == 0 {
            return Err(Error::Unrepresentable(
                "a graph with no edges between adjacent vertices reads back as induced".into(),
            ));
        }
        for e in g.edges() {
            let (a, b) = (e.first(), e.second());
            let _ = writeln!(out, "e {} {} {} {}", a.x, a.y, b.x, b.y);
        }
    }
    Ok(out)
}

/// `x y district` records, each vertex at most once.
pub fn parse_assignment(text: &str) -> Result<BTreeMap<Vertex, usize>> {
    let mut assignment = BTreeMap::new();
    for (line, fields) in records(text) {
        if fields.len() != 3 {
            return Err(parse_error(line, "expected `x y district`"));
        }
        let c: Vec<i64> = integers(line, &fields[..2])?;
        let d: Vec<usize> = integers(line, &fields[2..])?;
        let v = Vertex::new(c[0], c[1]);
        if assignment.insert(v, d[0]).is_some() {
            return Err(parse_error(line, format!("{v} assigned twice")));
        }
    }
    Ok(assignment)
}

pub fn parse_partition(base: GridGraph, text: &str) -> Result<DistrictPartition> {
    DistrictPartition::new(base, &parse_assignment(text)?)
}

pub fn write_partition(p: &DistrictPartition) -> String {
    let mut out = String::new();
    for (v, d) in p.base().vertices().iter().zip(p.assignment()) {
        let _ = writeln!(out, "{} {} {d}", v.x, v.y);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;
    use proptest::prelude::*;

    fn v(x: i64, y: i64) -> Vertex {
        Vertex::new(x, y)
    }

    #[test]
    fn induced_when_no_edges() {
        let g = parse_grid("# unit square\nv 0 0\nv 1 0\n\nv 0 1\nv 1 1\n").unwrap();
        assert_eq!(g, shapes::rectangle(2, 2));
    }

    #[test]
    fn explicit_edges() {
        let g = parse_grid("v 0 0\nv 1 0\nv 0 1\ne 0 0 1 0\n").unwrap();
        assert_eq!(g.num_edges(), 1);
        assert!(!g.is_induced());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line_of = |text: &str| match parse_grid(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line_of("v 0 0\nv 1 x\n"), 2);
        assert_eq!(line_of("v 0 0\n\nw 1 1\n"), 3);
        assert_eq!(line_of("v 0 0\nv 2 0\ne 0 0 2 0\n"), 3);
        assert_eq!(line_of("v 0 0\ne 0 0 1 0\n"), 2);
        assert_eq!(parse_grid("# nothing\n").unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn edgeless_non_induced_is_unrepresentable() {
        let g = GridGraph::new([v(0, 0), v(1, 0)], Vec::<(Vertex, Vertex)>::new()).unwrap();
        assert!(matches!(write_grid(&g), Err(Error::Unrepresentable(_))));
    }

    #[test]
    fn partition_files() {
        let base = shapes::rectangle(2, 2);
        let p = parse_partition(base.clone(), "0 0 1\n1 0 1\n0 1 2\n1 1 2\n").unwrap();
        assert_eq!(p.num_districts(), 2);
        assert_eq!(parse_partition(base.clone(), &write_partition(&p)).unwrap(), p);
        assert!(matches!(
            parse_assignment("0 0 1\n0 0 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_assignment("0 0\n"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(
            parse_partition(base, "0 0 1\n1 1 1\n0 1 2\n1 0 2\n").unwrap_err(),
            Error::DistrictDisconnected(1)
        );
    }

    fn any_grid_graph() -> impl Strategy<Value = GridGraph> {
        (proptest::collection::btree_set((-4i64..4, -4i64..4), 1..20), any::<u64>()).prop_map(|(points, mask)| {
            let vertices: Vec<Vertex> = points.into_iter().map(Vertex::from).collect();
            let full = GridGraph::induced(vertices.clone()).unwrap();
            let edges: Vec<(Vertex, Vertex)> = full
                .edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
                .map(|(_, e)| (e.first(), e.second()))
                .collect();
            GridGraph::new(vertices, edges).unwrap()
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in any_grid_graph()) {
            match write_grid(&g) {
                Ok(text) => prop_assert_eq!(parse_grid(&text).unwrap(), g),
                Err(Error::Unrepresentable(_)) => prop_assert!(g.num_edges() == 0 && !g.is_induced()),
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }
}
