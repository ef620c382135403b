//! Spanning-tree counts via the Matrix-Tree theorem and the multiplier
//! function over the words-on-a-page order.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::format::{decimal, ln_biguint, ln_rational, significant};
use crate::lattice::{GridGraph, Vertex};
use crate::linalg::{determinant, BandMatrix};

/// Generalized spanning-tree count: one tree per connected component.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeCount {
    pub value: BigUint,
    /// Natural log of `value`.
    pub log_value: f64,
}

impl TreeCount {
    fn new(value: BigUint) -> Self {
        let log_value = ln_biguint(&value);
        TreeCount { value, log_value }
    }

    /// `tau = <integer>` and `ln_tau = <12 significant digits>` lines.
    pub fn to_text(&self) -> String {
        format!(
            "tau = {}\nln_tau = {}\n",
            self.value,
            significant(self.log_value, 12)
        )
    }
}

/// Product over connected components of their spanning-tree counts; a
/// single vertex contributes 1.
pub fn tau(g: &GridGraph) -> TreeCount {
    TreeCount::new(tau_value(g))
}

pub(crate) fn tau_value(g: &GridGraph) -> BigUint {
    g.components()
        .iter()
        .map(|comp| component_tau(g, comp))
        .product()
}

/// Spanning trees of the subgraph induced by `comp` (ascending indices into
/// `g`, assumed connected): determinant of the Laplacian with the last
/// vertex's row and column removed.
pub(crate) fn component_tau(g: &GridGraph, comp: &[usize]) -> BigUint {
    if comp.len() <= 1 {
        return BigUint::one();
    }
    let local: HashMap<usize, usize> = comp.iter().enumerate().map(|(l, &i)| (i, l)).collect();
    let n = comp.len() - 1;
    let mut band = 1;
    for (l, &i) in comp.iter().enumerate().take(n) {
        for &j in g.neighbors(i) {
            if let Some(&lj) = local.get(&j) {
                if lj < n {
                    band = band.max(l.abs_diff(lj));
                }
            }
        }
    }
    let mut laplacian = BandMatrix::zeros(n, band);
    for (l, &i) in comp.iter().enumerate().take(n) {
        let mut degree = 0;
        for &j in g.neighbors(i) {
            if let Some(&lj) = local.get(&j) {
                degree += 1;
                if lj < n {
                    laplacian.set(l, lj, -1);
                }
            }
        }
        laplacian.set(l, l, degree);
    }
    let det = determinant(&laplacian).expect("reduced Laplacian of a connected graph is positive definite");
    det.to_biguint().expect("positive determinant")
}

/// The prefix graphs `(H'_v, H_v)` of `v`: the subgraphs of `g` induced by
/// the vertices strictly before `v`, and up to and including `v`. `H'_v` is
/// `None` for the first vertex.
pub fn prefix_graphs(g: &GridGraph, v: Vertex) -> Result<(Option<GridGraph>, GridGraph)> {
    if !g.contains(v) {
        return Err(Error::VertexNotInGraph(v));
    }
    let before = g.induced_subgraph(|p| p < v);
    let through = g.induced_subgraph(|p| p <= v).expect("contains v");
    Ok((before, through))
}

/// `m_v = tau(H_v) / tau(H'_v)`, computed from the two generalized counts.
pub fn multiplier(g: &GridGraph, v: Vertex) -> Result<BigRational> {
    let (before, through) = prefix_graphs(g, v)?;
    let denominator = before.as_ref().map_or_else(BigUint::one, tau_value);
    Ok(BigRational::new(
        BigInt::from(tau_value(&through)),
        BigInt::from(denominator),
    ))
}

/// Component-local multiplier: only the component of `v` changes between
/// `H'_v` and `H_v`, so the other components cancel from the ratio.
fn local_multiplier(g: &GridGraph, i: usize) -> BigRational {
    let within = |limit: usize, start: usize| -> Vec<usize> {
        let mut seen = vec![false; limit + 1];
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if w <= limit && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comp
    };
    let earlier: Vec<usize> = g.neighbors(i).iter().copied().filter(|&j| j < i).collect();
    if earlier.is_empty() {
        return BigRational::one();
    }
    let mut merged: Vec<Vec<usize>> = Vec::new();
    for &j in &earlier {
        if !merged.iter().any(|c| c.binary_search(&j).is_ok()) {
            merged.push(within(i - 1, j));
        }
    }
    let numerator = component_tau(g, &within(i, i));
    let denominator: BigUint = merged.iter().map(|c| component_tau(g, c)).product();
    BigRational::new(BigInt::from(numerator), BigInt::from(denominator))
}

/// Multipliers of every vertex in words-on-a-page order.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplierProfile {
    pub order: Vec<Vertex>,
    pub multipliers: Vec<BigRational>,
    pub log_tau: f64,
}

impl MultiplierProfile {
    pub fn product(&self) -> BigRational {
        self.multipliers.iter().product()
    }

    pub fn get(&self, v: Vertex) -> Option<&BigRational> {
        self.order
            .binary_search(&v)
            .ok()
            .map(|i| &self.multipliers[i])
    }

    /// Vertices whose multiplier is below 1 (none are expected).
    pub fn below_one(&self) -> Vec<Vertex> {
        let one = BigRational::one();
        self.order
            .iter()
            .zip(&self.multipliers)
            .filter(|(_, m)| **m < one)
            .map(|(&v, _)| v)
            .collect()
    }

    /// CSV with header `x,y,multiplier`, multipliers to 12 decimal places.
    pub fn heatmap_csv(&self) -> String {
        let mut out = String::from("x,y,multiplier\n");
        for (v, m) in self.order.iter().zip(&self.multipliers) {
            let _ = writeln!(out, "{},{},{}", v.x, v.y, decimal(m, 12));
        }
        out
    }
}

pub fn multiplier_profile(g: &GridGraph) -> MultiplierProfile {
    let multipliers: Vec<BigRational> = (0..g.num_vertices())
        .into_par_iter()
        .map(|i| local_multiplier(g, i))
        .collect();
    let product: BigRational = multipliers.iter().product();
    assert_eq!(
        product,
        BigRational::from_integer(BigInt::from(tau_value(g))),
        "multipliers must multiply to tau"
    );
    debug_assert!(multipliers.iter().all(|m| m.is_positive()));
    let log_tau = multipliers.iter().map(ln_rational).sum();
    MultiplierProfile {
        order: g.vertices().to_vec(),
        multipliers,
        log_tau,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    fn v(x: i64, y: i64) -> Vertex {
        Vertex::new(x, y)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_counts() {
        assert_eq!(tau(&shapes::rectangle(2, 2)).value, BigUint::from(4u32));
        assert_eq!(tau(&shapes::rectangle(3, 2)).value, BigUint::from(15u32));
        assert_eq!(tau(&shapes::ring_cycle(2)).value, BigUint::from(8u32));
        assert_eq!(tau(&GridGraph::induced([v(5, 5)]).unwrap()).value, BigUint::one());
    }

    #[test]
    fn square_grid_counts() {
        // n x n grids, OEIS A007341
        let expected = [
            "1",
            "4",
            "192",
            "100352",
            "557568000",
            "32565539635200",
            "19872369301840986112",
            "126231322912498539682594816",
            "8326627661691818545121844900397056",
            "5694319004079097795957215725765328371712000",
        ];
        for (n, want) in expected.iter().enumerate() {
            let n = n as i64 + 1;
            assert_eq!(tau(&shapes::rectangle(n, n)).value.to_string(), *want, "n = {n}");
        }
    }

    #[test]
    fn disconnected_is_product() {
        let g = GridGraph::induced(
            shapes::rectangle(2, 2)
                .vertices()
                .iter()
                .copied()
                .chain(shapes::rectangle(3, 2).translate(10, 0).vertices().iter().copied()),
        )
        .unwrap();
        assert_eq!(tau(&g).value, BigUint::from(60u32));
    }

    #[test]
    fn square_and_diamond_logs() {
        assert!((tau(&shapes::rectangle(12, 12)).log_value - 146.15).abs() < 0.01);
        assert!((tau(&shapes::diamond(8)).log_value - 136.19).abs() < 0.01);
        assert_eq!(tau(&shapes::diamond(8)).value, tau(&shapes::trimmed_diamond(8)).value);
    }

    #[test]
    fn prefix_graph_examples() {
        let g = shapes::rectangle(2, 2);
        let (before, through) = prefix_graphs(&g, v(0, 0)).unwrap();
        let before = before.unwrap();
        assert_eq!((before.num_vertices(), before.num_edges()), (2, 1));
        assert_eq!((through.num_vertices(), through.num_edges()), (3, 2));
        let (before, through) = prefix_graphs(&g, v(0, 1)).unwrap();
        assert!(before.is_none());
        assert_eq!(through.num_vertices(), 1);
        let (before, through) = prefix_graphs(&g, v(1, 0)).unwrap();
        assert_eq!(before.unwrap().num_vertices(), 3);
        assert_eq!(through, g);
        assert_eq!(
            prefix_graphs(&g, v(7, 7)).unwrap_err(),
            Error::VertexNotInGraph(v(7, 7))
        );
    }

    #[test]
    fn unit_square_profile() {
        let g = shapes::rectangle(2, 2);
        let profile = multiplier_profile(&g);
        assert_eq!(profile.order, vec![v(0, 1), v(1, 1), v(0, 0), v(1, 0)]);
        assert_eq!(profile.multipliers, vec![q(1, 1), q(1, 1), q(1, 1), q(4, 1)]);
        assert_eq!(multiplier(&g, v(1, 0)).unwrap(), q(4, 1));
        assert_eq!(profile.heatmap_csv().lines().count(), 5);
        assert!(profile.heatmap_csv().ends_with("1,0,4.000000000000\n"));
    }

    #[test]
    fn local_multiplier_matches_literal_ratio() {
        for g in [shapes::ring_cycle(3), shapes::diamond(3), shapes::rectangle(4, 3)] {
            let profile = multiplier_profile(&g);
            for (&p, m) in profile.order.iter().zip(&profile.multipliers) {
                assert_eq!(*m, multiplier(&g, p).unwrap(), "at {p}");
            }
        }
    }

    #[test]
    fn cycle_witness_all_top_left() {
        let c8 = shapes::ring_cycle(2);
        assert_eq!(c8.top_left_boundary().len(), 8);
        let profile = multiplier_profile(&c8);
        assert_eq!(profile.product(), q(8, 1));
        // the last vertex closes the 8-cycle
        assert_eq!(profile.multipliers.last().unwrap(), &q(8, 1));
    }

    #[test]
    fn multiplier_sixteen_witness() {
        // a 16-cycle: every vertex is top-left boundary, yet closing it multiplies by 16
        let c16 = shapes::ring_cycle(4);
        assert_eq!(c16.top_left_boundary().len(), 16);
        assert_eq!(multiplier(&c16, v(4, 0)).unwrap(), q(16, 1));
    }

    #[test]
    fn square_profile_ones_are_top_left_boundary() {
        let g = shapes::rectangle(12, 12);
        let profile = multiplier_profile(&g);
        let ones: Vec<Vertex> = profile
            .order
            .iter()
            .zip(&profile.multipliers)
            .filter(|(_, m)| **m == BigRational::one())
            .map(|(&p, _)| p)
            .collect();
        assert_eq!(ones.len(), 23);
        assert!(ones.iter().all(|p| g.top_left_boundary().contains(p)));
        assert!((profile.log_tau - tau(&g).log_value).abs() < 1e-9);
        assert!(profile.below_one().is_empty());
    }

    #[test]
    fn tree_count_text() {
        let text = tau(&shapes::rectangle(2, 2)).to_text();
        assert_eq!(text, "tau = 4\nln_tau = 1.38629436112\n");
    }
}
