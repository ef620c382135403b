//! Partitions of a grid graph into districts: cut edges, spanning tree
//! scores, the cut-edge area identity, and a recombination chain.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigUint;
use rand::seq::IndexedRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::bounds::{at_least_base_power, at_most_four_power, Verdict};
use crate::constants::ln_base;
use crate::error::{Error, Result};
use crate::format::{ln_biguint, significant};
use crate::lattice::{GridGraph, Vertex};
use crate::randwalk::{sample_spanning_tree_with, stream_rng, SamplerKind};
use crate::treecount::tau;

/// Assignment of every base vertex to a district `1..=k`; each district is
/// non-empty and connected.
#[derive(Debug, Clone, PartialEq)]
pub struct DistrictPartition {
    base: GridGraph,
    /// District of each base vertex, by vertex index.
    assignment: Vec<usize>,
    k: usize,
}

impl DistrictPartition {
    pub fn new(base: GridGraph, assignment: &BTreeMap<Vertex, usize>) -> Result<Self> {
        if let Some(v) = assignment.keys().find(|&&v| !base.contains(v)) {
            return Err(Error::InvalidPartition(format!("{v} is not a base vertex")));
        }
        let by_index = base
            .vertices()
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .copied()
                    .ok_or_else(|| Error::InvalidPartition(format!("{v} is unassigned")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Self::from_indices(base, by_index)
    }

    /// `assignment[i]` is the district of base vertex `i`.
    pub fn from_indices(base: GridGraph, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != base.num_vertices() {
            return Err(Error::InvalidPartition("assignment length differs from vertex count".into()));
        }
        if assignment.contains(&0) {
            return Err(Error::InvalidPartition("district ids start at 1".into()));
        }
        let k = assignment.iter().copied().max().unwrap_or(0);
        let mut sizes = vec![0usize; k + 1];
        for &d in &assignment {
            sizes[d] += 1;
        }
        if let Some(d) = (1..=k).find(|&d| sizes[d] == 0) {
            return Err(Error::InvalidPartition(format!("district {d} is empty")));
        }
        let p = DistrictPartition { base, assignment, k };
        for d in 1..=k {
            if !p.district(d).is_connected() {
                return Err(Error::DistrictDisconnected(d));
            }
        }
        Ok(p)
    }

    pub fn base(&self) -> &GridGraph {
        &self.base
    }

    pub fn num_districts(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn district_of(&self, v: Vertex) -> Option<usize> {
        self.base.index_of(v).map(|i| self.assignment[i])
    }

    /// Induced subgraph of district `d`.
    pub fn district(&self, d: usize) -> GridGraph {
        let members: Vec<usize> = (0..self.assignment.len()).filter(|&i| self.assignment[i] == d).collect();
        self.base.subgraph_from_indices(&members)
    }

    pub fn cut_edges(&self) -> usize {
        self.base
            .edges()
            .iter()
            .filter(|e| {
                let a = self.base.index_of(e.first()).unwrap();
                let b = self.base.index_of(e.second()).unwrap();
                self.assignment[a] != self.assignment[b]
            })
            .count()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartitionScore {
    pub cut_edges: usize,
    pub district_areas: Vec<usize>,
    pub district_trees: Vec<BigUint>,
    /// `ln` of the product of the districts' tree counts.
    pub spanning_score: f64,
    /// `Area(G) + K - 1`.
    pub c1: usize,
    pub base_simple: bool,
    pub simple_flags: Vec<bool>,
}

impl PartitionScore {
    pub fn all_simple(&self) -> bool {
        self.base_simple && self.simple_flags.iter().all(|&s| s)
    }

    pub fn tree_product(&self) -> BigUint {
        self.district_trees.iter().product()
    }

    fn non_simple_reason(&self) -> Option<String> {
        if !self.base_simple {
            return Some("base graph not simple".into());
        }
        let bad: Vec<String> = self
            .simple_flags
            .iter()
            .enumerate()
            .filter(|(_, &s)| !s)
            .map(|(i, _)| (i + 1).to_string())
            .collect();
        (!bad.is_empty()).then(|| format!("non-simple districts: {}", bad.join(",")))
    }
}

pub fn score_partition(p: &DistrictPartition) -> Result<PartitionScore> {
    let mut district_areas = Vec::with_capacity(p.k);
    let mut district_trees = Vec::with_capacity(p.k);
    let mut simple_flags = Vec::with_capacity(p.k);
    for d in 1..=p.k {
        let g = p.district(d);
        if !g.is_connected() {
            return Err(Error::DistrictDisconnected(d));
        }
        let report = g.check_simple();
        district_areas.push(g.area());
        simple_flags.push(report.is_simple);
        district_trees.push(tau(&g).value);
    }
    let product: BigUint = district_trees.iter().product();
    Ok(PartitionScore {
        cut_edges: p.cut_edges(),
        district_areas,
        spanning_score: ln_biguint(&product),
        district_trees,
        c1: p.base.area() + p.k - 1,
        base_simple: p.base.check_simple().is_simple,
        simple_flags,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub verdict: Verdict,
    pub cut_edges: usize,
    /// `C1 - sum of district areas`.
    pub predicted: i64,
}

/// `|cut| = Area(G) + K - 1 - sum Area(G_i)`, for a simple base with simple districts.
pub fn verify_redistrict_identity(p: &DistrictPartition) -> Result<IdentityCheck> {
    let score = score_partition(p)?;
    Ok(identity_from_score(&score))
}

pub fn identity_from_score(score: &PartitionScore) -> IdentityCheck {
    let predicted = score.c1 as i64 - score.district_areas.iter().sum::<usize>() as i64;
    let verdict = match score.non_simple_reason() {
        Some(why) => Verdict::NotApplicable(why),
        None => {
            if predicted == score.cut_edges as i64 {
                Verdict::Pass
            } else {
                Verdict::Fail
            }
        }
    };
    IdentityCheck {
        verdict,
        cut_edges: score.cut_edges,
        predicted,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichCheck {
    /// `C1 - ln(prod tau)/ln b <= |cut|`.
    pub lower: Verdict,
    /// `|cut| <= C1 - ln(prod tau)/ln 4`.
    pub upper: Verdict,
}

impl SandwichCheck {
    pub fn holds(&self) -> bool {
        self.lower.is_pass() && self.upper.is_pass()
    }
}

/// Both sides of the cut-edge sandwich, certified against the base bracket.
pub fn verify_boundss(p: &DistrictPartition) -> Result<SandwichCheck> {
    Ok(sandwich_from_score(&score_partition(p)?))
}

/// With `d = C1 - |cut|` the two sides read `prod tau >= b^d` and `prod tau <= 4^d`.
pub fn sandwich_from_score(score: &PartitionScore) -> SandwichCheck {
    if let Some(why) = score.non_simple_reason() {
        return SandwichCheck {
            lower: Verdict::NotApplicable(why.clone()),
            upper: Verdict::NotApplicable(why),
        };
    }
    let product = score.tree_product();
    match usize::try_from(score.c1 as i64 - score.cut_edges as i64) {
        Ok(d) => SandwichCheck {
            lower: at_least_base_power(&product, d),
            upper: at_most_four_power(&product, d),
        },
        // a negative exponent: prod tau >= 1 > b^d, and prod tau <= 4^d fails
        Err(_) => SandwichCheck {
            lower: Verdict::Pass,
            upper: Verdict::Fail,
        },
    }
}

/// Stripes, or a `r` by `r` grid of blocks when `k = r^2`, over the bounding box.
pub fn initial_partition(g: &GridGraph, k: usize) -> Result<DistrictPartition> {
    if k < 2 {
        return Err(Error::TooSmall { name: "districts", min: 2, got: k as i64 });
    }
    if k > g.num_vertices() {
        return Err(Error::Infeasible(format!(
            "{k} districts for {} vertices",
            g.num_vertices()
        )));
    }
    let xs = g.vertices().iter().map(|v| v.x);
    let ys = g.vertices().iter().map(|v| v.y);
    let (min_x, max_x) = (xs.clone().min().unwrap(), xs.max().unwrap());
    let (min_y, max_y) = (ys.clone().min().unwrap(), ys.max().unwrap());
    let (width, height) = ((max_x - min_x + 1) as usize, (max_y - min_y + 1) as usize);
    let r = (k as f64).sqrt().round() as usize;
    let (cols, rows) = if r * r == k { (r, r) } else { (k, 1) };
    let band = |offset: i64, span: usize, parts: usize| offset as usize * parts / span;
    let assignment = g
        .vertices()
        .iter()
        .map(|v| {
            let col = band(v.x - min_x, width, cols);
            let row = band(v.y - min_y, height, rows);
            row * cols + col + 1
        })
        .collect();
    DistrictPartition::from_indices(g.clone(), assignment)
        .map_err(|e| Error::Infeasible(format!("no stripe start partition: {e}")))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleConfig {
    pub districts: usize,
    pub steps: usize,
    pub seed: u64,
    pub pop_tolerance: f64,
}

pub const TREE_DRAWS: usize = 64;
const PAIR_DRAWS: usize = 1000;
pub const DEFAULT_POP_TOLERANCE: f64 = 0.05;

/// A spanning tree of a graph rooted at vertex 0.
struct RootedTree {
    children: Vec<Vec<usize>>,
    /// Vertices in breadth-first order from the root.
    order: Vec<usize>,
    size: Vec<usize>,
}

impl RootedTree {
    fn new(g: &GridGraph, tree: &[crate::lattice::Edge]) -> Self {
        let n = g.num_vertices();
        let mut adj = vec![Vec::new(); n];
        for e in tree {
            let (a, b) = (g.index_of(e.first()).unwrap(), g.index_of(e.second()).unwrap());
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut parent = vec![0; n];
        let mut children = vec![Vec::new(); n];
        let mut order = vec![0];
        seen[0] = true;
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    children[u].push(w);
                    order.push(w);
                }
            }
            i += 1;
        }
        let mut size = vec![1usize; n];
        for &u in order.iter().skip(1).rev() {
            size[parent[u]] += size[u];
        }
        RootedTree { children, order, size }
    }

    fn below(&self, u: usize) -> Vec<usize> {
        let mut out = vec![u];
        let mut i = 0;
        while i < out.len() {
            out.extend_from_slice(&self.children[out[i]]);
            i += 1;
        }
        out
    }
}

/// One recombination move, or `None` when every attempt was rejected.
fn recombine<R: Rng + ?Sized>(
    p: &DistrictPartition,
    ideal: f64,
    tolerance: f64,
    rng: &mut R,
) -> Option<Vec<usize>> {
    let base = &p.base;
    let pairs: Vec<(usize, usize)> = base
        .edges()
        .iter()
        .filter_map(|e| {
            let a = p.assignment[base.index_of(e.first()).unwrap()];
            let b = p.assignment[base.index_of(e.second()).unwrap()];
            (a != b).then(|| (a.min(b), a.max(b)))
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let (lo, hi) = (ideal * (1.0 - tolerance), ideal * (1.0 + tolerance));
    for _ in 0..PAIR_DRAWS {
        let &(d1, d2) = pairs.choose(rng)?;
        let members: Vec<usize> = (0..base.num_vertices())
            .filter(|&i| p.assignment[i] == d1 || p.assignment[i] == d2)
            .collect();
        let merged = base.subgraph_from_indices(&members);
        let total = merged.num_vertices();
        let balanced = |s: usize| (lo..=hi).contains(&(s as f64)) && (lo..=hi).contains(&((total - s) as f64));
        for _ in 0..TREE_DRAWS {
            let tree = sample_spanning_tree_with(&merged, SamplerKind::Wilson, rng).expect("merged pair is connected");
            let rooted = RootedTree::new(&merged, &tree);
            let cuts: Vec<usize> = rooted.order[1..].iter().copied().filter(|&u| balanced(rooted.size[u])).collect();
            let Some(&child) = cuts.choose(rng) else { continue };
            let mut next = p.assignment.clone();
            for &global in &members {
                next[global] = d1;
            }
            for local in rooted.below(child) {
                next[members[local]] = d2;
            }
            return Some(next);
        }
    }
    None
}

/// Runs the recombination chain from [`initial_partition`]; returns the
/// `steps + 1` partitions visited. Deterministic in `config.seed`.
pub fn run_chain(g: &GridGraph, config: &EnsembleConfig) -> Result<Vec<DistrictPartition>> {
    if !(0.0..1.0).contains(&config.pop_tolerance) {
        return Err(Error::InvalidArgument("pop_tolerance must lie in [0, 1)".into()));
    }
    let start = initial_partition(g, config.districts)?;
    let ideal = g.num_vertices() as f64 / config.districts as f64;
    let mut rng = stream_rng(config.seed, 0);
    let mut chain = vec![start];
    for _ in 0..config.steps {
        let current = chain.last().unwrap();
        let next = match recombine(current, ideal, config.pop_tolerance, &mut rng) {
            Some(assignment) => DistrictPartition {
                base: current.base.clone(),
                assignment,
                k: current.k,
            },
            None => current.clone(),
        };
        chain.push(next);
    }
    Ok(chain)
}

/// Scores of every partition along the chain, scored in parallel.
pub fn run_ensemble(g: &GridGraph, config: &EnsembleConfig) -> Result<Vec<PartitionScore>> {
    run_chain(g, config)?.par_iter().map(score_partition).collect()
}

/// Scatter CSV with the bounding-line parameters as header comments.
pub fn scatter_csv(scores: &[PartitionScore]) -> String {
    let mut out = String::new();
    if let Some(first) = scores.first() {
        let _ = writeln!(out, "# intercept: {}", first.c1);
    }
    let _ = writeln!(out, "# slope_base: {}", significant(-1.0 / ln_base(), 12));
    let _ = writeln!(out, "# slope_four: {}", significant(-1.0 / 4f64.ln(), 12));
    out.push_str("step,cut_edges,spanning_score,all_simple\n");
    for (step, s) in scores.iter().enumerate() {
        let _ = writeln!(
            out,
            "{step},{},{},{}",
            s.cut_edges,
            significant(s.spanning_score, 12),
            s.all_simple()
        );
    }
    out
}

/// Sample Pearson correlation, `None` when either series is constant.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx).powi(2);
        syy += (y - my).powi(2);
    }
    (sxx > 0.0 && syy > 0.0).then(|| sxy / (sxx * syy).sqrt())
}
