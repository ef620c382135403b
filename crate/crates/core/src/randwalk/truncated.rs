//! Finite pieces `U(k)` of the infinite prefix graph of the origin, and the
//! bound function `F(k)` they define.
//!
//! The infinite prefix graph holds every lattice point with `y >= 1`, plus the
//! points `(x, 0)` with `x <= 0`. `U(k)` is the ball of radius `k` around the
//! origin in that graph, with its degree-one vertices removed once.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{absorption_probability, escape_probability};
use crate::error::{Error, Result};
use crate::format::decimal;
use crate::lattice::{GridGraph, Vertex};

fn in_prefix_plane(p: Vertex) -> bool {
    p.y >= 1 || (p.y == 0 && p.x <= 0)
}

#[derive(Debug, Clone)]
pub struct TruncatedU {
    pub k: usize,
    pub graph: GridGraph,
}

impl TruncatedU {
    fn build(k: usize) -> Self {
        let origin = Vertex::new(0, 0);
        let mut dist = HashMap::from([(origin, 0usize)]);
        let mut queue = VecDeque::from([origin]);
        while let Some(p) = queue.pop_front() {
            let d = dist[&p];
            if d == k {
                continue;
            }
            for n in p.lattice_neighbors() {
                if in_prefix_plane(n) && !dist.contains_key(&n) {
                    dist.insert(n, d + 1);
                    queue.push_back(n);
                }
            }
        }
        let ball = GridGraph::induced(dist.into_keys()).expect("contains origin");
        let leaves: BTreeSet<Vertex> = (0..ball.num_vertices())
            .filter(|&i| ball.degree(i) == 1)
            .map(|i| ball.vertex(i))
            .collect();
        let graph = ball
            .induced_subgraph(|p| !leaves.contains(&p))
            .expect("origin has degree two");
        TruncatedU { k, graph }
    }

    /// Whether `v + U(k)` is a subgraph of `g`.
    pub fn fits_at(&self, g: &GridGraph, v: Vertex) -> bool {
        let shift = |p: Vertex| p.offset(v.x, v.y);
        self.graph.vertices().iter().all(|&p| g.contains(shift(p)))
            && self
                .graph
                .edges()
                .iter()
                .all(|e| g.has_edge(shift(e.first()), shift(e.second())))
    }
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<TruncatedU>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TruncatedU>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `U(k)` for `k >= 1`, memoised.
pub fn build_truncated_u(k: usize) -> Result<Arc<TruncatedU>> {
    if k < 1 {
        return Err(Error::TooSmall { name: "k", min: 1, got: k as i64 });
    }
    if let Some(u) = cache().lock().unwrap().get(&k) {
        return Ok(Arc::clone(u));
    }
    let u = Arc::new(TruncatedU::build(k));
    cache().lock().unwrap().insert(k, Arc::clone(&u));
    Ok(u)
}

fn check_k(k: usize) -> Result<Arc<TruncatedU>> {
    if k < 2 {
        return Err(Error::TooSmall { name: "k", min: 2, got: k as i64 });
    }
    build_truncated_u(k)
}

/// Probability that the walk on `U(k)` from `(0, 1)` reaches the origin before `(-1, 0)`.
pub fn q_value(k: usize) -> Result<BigRational> {
    let u = check_k(k)?;
    let (v, a, b) = (Vertex::new(0, 0), Vertex::new(0, 1), Vertex::new(-1, 0));
    absorption_probability(&u.graph, a, &BTreeSet::from([v, b]), v)
}

/// Probability that the walk on `U(k)` from the origin reaches `(-1, 0)` before returning.
pub fn e_value(k: usize) -> Result<BigRational> {
    let u = check_k(k)?;
    escape_probability(&u.graph, Vertex::new(0, 0), Vertex::new(-1, 0))
}

/// `F(k) = (2 - Q) / (1 - Q)`, the largest multiplier a vertex of depth `k`
/// can have. Defined for `k >= 2`; memoised.
pub fn f_value(k: usize) -> Result<BigRational> {
    static CACHE: OnceLock<Mutex<HashMap<usize, BigRational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&k) {
        return Ok(f.clone());
    }
    let q = q_value(k)?;
    let two = BigRational::from_integer(BigInt::from(2));
    let f = (&two - &q) / (BigRational::one() - &q);
    let e = e_value(k)?;
    let twice = &two * &e;
    if f != &twice / (&twice - BigRational::one()) {
        return Err(Error::Inconsistent(format!("escape forms of F({k}) disagree")));
    }
    cache.lock().unwrap().insert(k, f.clone());
    Ok(f)
}

/// `F(2), ..., F(max_k)`.
pub fn f_table(max_k: usize) -> Result<Vec<(usize, BigRational)>> {
    if max_k < 2 {
        return Err(Error::TooSmall { name: "max_k", min: 2, got: max_k as i64 });
    }
    (2..=max_k).map(|k| Ok((k, f_value(k)?))).collect()
}

/// CSV of `F(k)`: exact fraction and ten-place rounding.
pub fn fk_table_csv(max_k: usize) -> Result<String> {
    let mut out = String::from("k,f_exact,f_decimal\n");
    for (k, f) in f_table(max_k)? {
        out.push_str(&format!("{k},{f},{}\n", decimal(&f, 10)));
    }
    Ok(out)
}

/// The largest `k` with `v + U(k)` contained in `g`.
pub fn depth(g: &GridGraph, v: Vertex) -> Result<usize> {
    if !g.contains(v) {
        return Err(Error::VertexNotInGraph(v));
    }
    let mut k = 1;
    loop {
        let next = build_truncated_u(k + 1)?;
        if next.graph.num_vertices() > g.num_vertices() || !next.fits_at(g, v) {
            return Ok(k);
        }
        k += 1;
    }
}
