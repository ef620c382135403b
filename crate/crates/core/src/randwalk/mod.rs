//! Exact random-walk quantities on grid graphs.
//!
//! Hitting and escape probabilities are absorbing-chain solves over the
//! rationals. For a vertex `v` with top neighbour `a` and left neighbour `b`,
//! the prefix graph `H_v` gives the escape triple
//!
//! * `E` — walk from `v` reaches `b` before returning to `v`,
//! * `Q` — walk from `a` reaches `v` before `b`,
//! * `P = Q / (2 - Q)` — a uniform spanning tree of `H_v` uses both `va` and `vb`,
//!
//! and the multiplier `m_v = 2 / (1 - P) = (2 - Q) / (1 - Q) = 2E / (2E - 1)`.

mod sampler;
mod truncated;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Cell, GridGraph, Vertex};
use crate::linalg::{solve, BandMatrix};

pub use sampler::{
    estimate_p, sample_spanning_tree_with, sample_spanning_trees, sample_uniform_spanning_tree,
    stream_rng, PEstimate, SamplerKind,
};
pub use truncated::{build_truncated_u, depth, e_value, f_table, f_value, fk_table_csv, q_value, TruncatedU};

/// Simple random walk on one connected component of a grid graph, stopped
/// on a set of absorbing vertices. States are listed absorbing first, then
/// transient, each group in words-on-a-page order.
#[derive(Debug, Clone)]
pub struct AbsorbingChain {
    states: Vec<Vertex>,
    absorbing: usize,
    /// Neighbour state indices; the walk moves to each with equal probability.
    moves: Vec<Vec<usize>>,
}

impl AbsorbingChain {
    /// The chain on the component of `start` with the given absorbing set
    /// (vertices outside that component are ignored).
    pub fn on_component(g: &GridGraph, start: Vertex, absorb_at: &BTreeSet<Vertex>) -> Result<Self> {
        let start_index = g.index_of(start).ok_or(Error::VertexNotInGraph(start))?;
        let comp = g.component_of(start_index);
        let (absorbing, transient): (Vec<usize>, Vec<usize>) =
            comp.iter().partition(|&&i| absorb_at.contains(&g.vertex(i)));
        if absorbing.is_empty() {
            return Err(Error::CannotTerminate(start));
        }
        let order: Vec<usize> = absorbing.iter().chain(&transient).copied().collect();
        let mut position = vec![usize::MAX; g.num_vertices()];
        for (s, &i) in order.iter().enumerate() {
            position[i] = s;
        }
        let moves = order
            .iter()
            .map(|&i| g.neighbors(i).iter().map(|&j| position[j]).collect())
            .collect();
        Ok(AbsorbingChain {
            states: order.iter().map(|&i| g.vertex(i)).collect(),
            absorbing: absorbing.len(),
            moves,
        })
    }

    pub fn states(&self) -> &[Vertex] {
        &self.states
    }

    pub fn num_absorbing(&self) -> usize {
        self.absorbing
    }

    pub fn state_of(&self, v: Vertex) -> Option<usize> {
        self.states.iter().position(|&s| s == v)
    }

    /// Row `s` of the transition matrix as `(state, probability)` pairs.
    /// Absorbing rows are the identity.
    pub fn transition_row(&self, s: usize) -> Vec<(usize, BigRational)> {
        if s < self.absorbing {
            return vec![(s, BigRational::one())];
        }
        let degree = self.moves[s].len() as i64;
        let mut row: Vec<(usize, BigRational)> = Vec::new();
        for &t in &self.moves[s] {
            let p = BigRational::new(BigInt::one(), BigInt::from(degree));
            match row.iter_mut().find(|(u, _)| *u == t) {
                Some((_, acc)) => *acc += p,
                None => row.push((t, p)),
            }
        }
        row
    }

    /// Probability, for every transient state (in state order), of being
    /// absorbed at absorbing state `target`: one column of `(I - Q)^-1 R`.
    ///
    /// Each row of `(I - Q) x = R e_target` is scaled by the vertex degree,
    /// which turns the system into a symmetric positive-definite integer one.
    pub fn absorption_column(&self, target: usize) -> Result<Vec<BigRational>> {
        assert!(target < self.absorbing, "target must be absorbing");
        let n = self.states.len() - self.absorbing;
        let local = |s: usize| s - self.absorbing;
        let mut band = 1;
        for s in self.absorbing..self.states.len() {
            for &t in &self.moves[s] {
                if t >= self.absorbing {
                    band = band.max(local(s).abs_diff(local(t)));
                }
            }
        }
        let mut m = BandMatrix::zeros(n, band);
        let mut rhs = vec![0i64; n];
        for s in self.absorbing..self.states.len() {
            m.add(local(s), local(s), self.moves[s].len() as i64);
            for &t in &self.moves[s] {
                if t >= self.absorbing {
                    m.add(local(s), local(t), -1);
                } else if t == target {
                    rhs[local(s)] += 1;
                }
            }
        }
        solve(&m, &rhs)
    }
}

/// Probability that the walk from `start` is absorbed at `target` when it
/// stops on `absorb_at`.
pub fn absorption_probability(
    g: &GridGraph,
    start: Vertex,
    absorb_at: &BTreeSet<Vertex>,
    target: Vertex,
) -> Result<BigRational> {
    if !g.contains(target) {
        return Err(Error::VertexNotInGraph(target));
    }
    if !absorb_at.contains(&target) {
        return Err(Error::TargetNotAbsorbing(target));
    }
    if absorb_at.contains(&start) {
        return Err(Error::StartAbsorbing(start));
    }
    let chain = AbsorbingChain::on_component(g, start, absorb_at)?;
    let Some(target_state) = chain.state_of(target) else {
        // target lies in another component: never reached
        return Ok(BigRational::zero());
    };
    let column = chain.absorption_column(target_state)?;
    let s = chain.state_of(start).expect("start is in its own component");
    Ok(column[s - chain.num_absorbing()].clone())
}

/// Probability that the walk from `v` reaches `b` before returning to `v`.
pub fn escape_probability(g: &GridGraph, v: Vertex, b: Vertex) -> Result<BigRational> {
    let vi = g.index_of(v).ok_or(Error::VertexNotInGraph(v))?;
    let bi = g.index_of(b).ok_or(Error::VertexNotInGraph(b))?;
    if vi == bi || g.component_of(vi).binary_search(&bi).is_err() {
        return Err(Error::DifferentComponents(v, b));
    }
    let chain = AbsorbingChain::on_component(g, v, &BTreeSet::from([v, b]))?;
    let column = chain.absorption_column(chain.state_of(b).unwrap())?;
    let hit = |u: usize| -> BigRational {
        let u = g.vertex(u);
        if u == b {
            BigRational::one()
        } else {
            column[chain.state_of(u).unwrap() - chain.num_absorbing()].clone()
        }
    };
    let total: BigRational = g.neighbors(vi).iter().map(|&u| hit(u)).sum();
    Ok(total / BigInt::from(g.degree(vi)))
}

/// Escape, hitting and two-edge tree probabilities at one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EscapeTriple {
    pub e: BigRational,
    pub q: BigRational,
    pub p: BigRational,
}

impl EscapeTriple {
    fn two() -> BigRational {
        BigRational::from_integer(BigInt::from(2))
    }

    pub fn multiplier_from_p(&self) -> BigRational {
        Self::two() / (BigRational::one() - &self.p)
    }

    pub fn multiplier_from_q(&self) -> BigRational {
        (Self::two() - &self.q) / (BigRational::one() - &self.q)
    }

    pub fn multiplier_from_e(&self) -> BigRational {
        let twice = Self::two() * &self.e;
        &twice / (&twice - BigRational::one())
    }

    /// `E = 1/2 + (1 - Q)/2`, `P = Q/(2 - Q)`, and the three multiplier forms agree.
    pub fn identities_hold(&self) -> bool {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let e_from_q = &half + &half * (BigRational::one() - &self.q);
        let p_from_q = &self.q / (Self::two() - &self.q);
        let m = self.multiplier_from_p();
        self.e == e_from_q
            && self.p == p_from_q
            && m == self.multiplier_from_q()
            && m == self.multiplier_from_e()
    }

    pub fn multiplier(&self) -> BigRational {
        self.multiplier_from_p()
    }
}

/// The escape triple of `v` on the component of `v` in its prefix graph.
/// Requires the cell with bottom-right corner `v` to lie in `g`.
pub fn escape_triple(g: &GridGraph, v: Vertex) -> Result<EscapeTriple> {
    if !g.contains(v) {
        return Err(Error::VertexNotInGraph(v));
    }
    if !g.has_cell(Cell::new(v)) {
        return Err(Error::TopLeftBoundary(v));
    }
    let (a, b) = (v.up(), v.left());
    let prefix = g.induced_subgraph(|p| p <= v).expect("contains v");
    let component = prefix.subgraph_from_indices(&prefix.component_of(prefix.index_of(v).unwrap()));
    let e = escape_probability(&component, v, b)?;
    let q = absorption_probability(&component, a, &BTreeSet::from([v, b]), v)?;
    let p = &q / (EscapeTriple::two() - &q);
    let triple = EscapeTriple { e, q, p };
    if !triple.identities_hold() {
        return Err(Error::Inconsistent(format!("escape identities fail at {v}")));
    }
    Ok(triple)
}
