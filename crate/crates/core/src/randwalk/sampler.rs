//! Uniform spanning tree samplers.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::escape_triple;
use crate::error::{Error, Result};
use crate::lattice::{Edge, GridGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SamplerKind {
    /// Loop-erased random walks.
    #[default]
    Wilson,
    /// First-entrance edges of a covering random walk.
    AldousBroder,
}

/// Independent generator number `stream` derived from `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn tree_edges(g: &GridGraph, parent: &[Option<usize>]) -> Vec<Edge> {
    let mut edges: Vec<Edge> = parent
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|p| Edge::new(g.vertex(i), g.vertex(p)).expect("graph edge")))
        .collect();
    edges.sort();
    edges
}

fn wilson<R: Rng + ?Sized>(g: &GridGraph, rng: &mut R) -> Vec<Option<usize>> {
    let n = g.num_vertices();
    let mut in_tree = vec![false; n];
    let mut next: Vec<Option<usize>> = vec![None; n];
    in_tree[rng.random_range(0..n)] = true;
    for start in 0..n {
        let mut u = start;
        while !in_tree[u] {
            let step = *g.neighbors(u).choose(rng).expect("connected");
            next[u] = Some(step);
            u = step;
        }
        let mut u = start;
        while !in_tree[u] {
            in_tree[u] = true;
            u = next[u].unwrap();
        }
    }
    // only the root was never walked from
    next
}

fn aldous_broder<R: Rng + ?Sized>(g: &GridGraph, rng: &mut R) -> Vec<Option<usize>> {
    let n = g.num_vertices();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut u = rng.random_range(0..n);
    seen[u] = true;
    let mut remaining = n - 1;
    while remaining > 0 {
        let w = *g.neighbors(u).choose(rng).expect("connected");
        if !seen[w] {
            seen[w] = true;
            parent[w] = Some(u);
            remaining -= 1;
        }
        u = w;
    }
    parent
}

/// One spanning tree of a connected graph, as a sorted edge list.
pub fn sample_spanning_tree_with<R: Rng + ?Sized>(
    g: &GridGraph,
    kind: SamplerKind,
    rng: &mut R,
) -> Result<Vec<Edge>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let parent = match kind {
        SamplerKind::Wilson => wilson(g, rng),
        SamplerKind::AldousBroder => aldous_broder(g, rng),
    };
    Ok(tree_edges(g, &parent))
}

/// One Wilson tree from stream 0 of `seed`.
pub fn sample_uniform_spanning_tree(g: &GridGraph, seed: u64) -> Result<Vec<Edge>> {
    sample_spanning_tree_with(g, SamplerKind::Wilson, &mut stream_rng(seed, 0))
}

/// `count` trees drawn over `streams` independent generators in parallel.
/// The output depends only on `(seed, count, streams)`.
pub fn sample_spanning_trees(
    g: &GridGraph,
    kind: SamplerKind,
    count: usize,
    seed: u64,
    streams: usize,
) -> Result<Vec<Vec<Edge>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let streams = streams.max(1);
    let batches: Vec<Vec<Vec<Edge>>> = (0..streams)
        .into_par_iter()
        .map(|s| {
            let quota = count / streams + usize::from(s < count % streams);
            let mut rng = stream_rng(seed, s as u64);
            (0..quota)
                .map(|_| sample_spanning_tree_with(g, kind, &mut rng).expect("connected"))
                .collect()
        })
        .collect();
    Ok(batches.into_iter().flatten().collect())
}

const STREAMS: usize = 8;

/// Monte Carlo estimate of `P_v` with its exact value for comparison.
#[derive(Debug, Clone)]
pub struct PEstimate {
    pub samples: usize,
    pub hits: usize,
    pub estimate: f64,
    pub exact: BigRational,
    /// Standard error at the exact value.
    pub sigma: f64,
}

impl PEstimate {
    pub fn within_sigmas(&self, k: f64) -> bool {
        (self.estimate - self.exact.to_f64().unwrap()).abs() <= k * self.sigma
    }
}

/// Fraction of uniform spanning trees of the prefix component of `v` that
/// contain both edges from `v` to its top and left neighbours.
pub fn estimate_p(g: &GridGraph, v: Vertex, samples: usize, seed: u64) -> Result<PEstimate> {
    if samples == 0 {
        return Err(Error::NoSamples);
    }
    let exact = escape_triple(g, v)?.p;
    let prefix = g.induced_subgraph(|p| p <= v).expect("contains v");
    let component = prefix.subgraph_from_indices(&prefix.component_of(prefix.index_of(v).unwrap()));
    let wanted = BTreeSet::from([
        Edge::new(v, v.up()).expect("adjacent"),
        Edge::new(v, v.left()).expect("adjacent"),
    ]);
    let trees = sample_spanning_trees(&component, SamplerKind::Wilson, samples, seed, STREAMS)?;
    let hits = trees
        .iter()
        .filter(|t| wanted.iter().all(|e| t.binary_search(e).is_ok()))
        .count();
    let p = exact.to_f64().unwrap();
    Ok(PEstimate {
        samples,
        hits,
        estimate: hits as f64 / samples as f64,
        exact,
        sigma: (p * (1.0 - p) / samples as f64).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;
    use crate::treecount::tau;
    use num_traits::ToPrimitive;
    use statrs::distribution::{ChiSquared, ContinuousCDF};
    use std::collections::HashMap;

    fn assert_tree(g: &GridGraph, t: &[Edge]) {
        assert_eq!(t.len(), g.num_vertices() - 1);
        assert!(t.iter().all(|e| g.edges().contains(e)));
        let sub = GridGraph::new(g.vertices().iter().copied(), t.iter().map(|e| (e.first(), e.second())))
            .unwrap();
        assert!(sub.is_connected());
    }

    #[test]
    fn samples_are_spanning_trees() {
        let g = shapes::diamond(3);
        let mut rng = stream_rng(5, 0);
        for kind in [SamplerKind::Wilson, SamplerKind::AldousBroder] {
            for _ in 0..20 {
                assert_tree(&g, &sample_spanning_tree_with(&g, kind, &mut rng).unwrap());
            }
        }
        let single = GridGraph::induced([Vertex::new(0, 0)]).unwrap();
        assert!(sample_uniform_spanning_tree(&single, 1).unwrap().is_empty());
        let split = GridGraph::induced([Vertex::new(0, 0), Vertex::new(2, 0)]).unwrap();
        assert_eq!(sample_uniform_spanning_tree(&split, 1).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn reproducible_per_seed() {
        let g = shapes::rectangle(4, 4);
        let a = sample_spanning_trees(&g, SamplerKind::Wilson, 50, 9, 4).unwrap();
        let b = sample_spanning_trees(&g, SamplerKind::Wilson, 50, 9, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
    }

    fn chi_square_uniform(kind: SamplerKind) -> f64 {
        // 3x3 grid: 192 spanning trees
        let g = shapes::rectangle(3, 3);
        let total = tau(&g).value.to_usize().unwrap();
        let n = 40 * total;
        let mut counts: HashMap<Vec<Edge>, usize> = HashMap::new();
        for t in sample_spanning_trees(&g, kind, n, 21, 4).unwrap() {
            *counts.entry(t).or_default() += 1;
        }
        assert!(counts.len() <= total);
        let expected = n as f64 / total as f64;
        let missing = (total - counts.len()) as f64 * expected;
        let stat = counts.values().map(|&c| (c as f64 - expected).powi(2) / expected).sum::<f64>() + missing;
        let dist = ChiSquared::new((total - 1) as f64).unwrap();
        1.0 - dist.cdf(stat)
    }

    #[test]
    fn wilson_is_uniform() {
        assert!(chi_square_uniform(SamplerKind::Wilson) > 0.001);
    }

    #[test]
    fn aldous_broder_is_uniform() {
        assert!(chi_square_uniform(SamplerKind::AldousBroder) > 0.001);
    }

    #[test]
    fn tree_input_returns_itself() {
        let g = GridGraph::induced([Vertex::new(0, 0), Vertex::new(1, 0), Vertex::new(1, 1)]).unwrap();
        let all: Vec<Edge> = g.edges().iter().copied().collect();
        for kind in [SamplerKind::Wilson, SamplerKind::AldousBroder] {
            assert!(sample_spanning_trees(&g, kind, 10, 2, 2).unwrap().iter().all(|t| *t == all));
        }
    }

    #[test]
    fn four_cycle_frequencies() {
        let g = shapes::rectangle(2, 2);
        let n = 100_000;
        let mut counts: HashMap<Vec<Edge>, usize> = HashMap::new();
        for t in sample_spanning_trees(&g, SamplerKind::Wilson, n, 4, 8).unwrap() {
            *counts.entry(t).or_default() += 1;
        }
        assert_eq!(counts.len(), 4);
        assert!(counts.values().all(|&c| (c as f64 / n as f64 - 0.25).abs() < 0.01));
    }

    #[test]
    fn estimate_tracks_exact_p() {
        let g = shapes::rectangle(4, 4);
        let est = estimate_p(&g, Vertex::new(3, 0), 20_000, 3).unwrap();
        assert!(est.within_sigmas(4.0), "{est:?}");
        assert_eq!(estimate_p(&g, Vertex::new(3, 0), 0, 3).unwrap_err(), Error::NoSamples);
    }
}
