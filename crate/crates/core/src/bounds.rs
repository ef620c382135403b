//! Every spanning-tree bound for a grid graph, with certified verdicts.
//!
//! Comparisons never go through floating point: each bound is checked as an
//! integer inequality against rational powers, with the irrational base
//! `b = exp(4C/pi)` replaced by whichever end of its bracket makes a pass
//! certain.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::constants::{bulk_limit, constants, ln_base};
use crate::error::{Error, Result};
use crate::format::{ln_rational, significant};
use crate::lattice::GridGraph;
use crate::randwalk::{depth, f_value};
use crate::treecount::tau;

pub const DEFAULT_MAX_K: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The bracket around an irrational constant straddles the comparison.
    Inconclusive,
    NotApplicable(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        *self == Verdict::Pass
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail => f.write_str("fail"),
            Verdict::Inconclusive => f.write_str("inconclusive"),
            Verdict::NotApplicable(why) => write!(f, "not-applicable ({why})"),
        }
    }
}

fn rational_pow(r: &BigRational, e: usize) -> BigRational {
    Pow::pow(r, e as u64)
}

/// `x >= b^e` with `b` known only as the base bracket.
pub(crate) fn at_least_base_power(x: &BigUint, e: usize) -> Verdict {
    let x = BigRational::from_integer(BigInt::from(x.clone()));
    let c = constants();
    if x >= rational_pow(c.base_hi(), e) {
        Verdict::Pass
    } else if x < rational_pow(c.base_lo(), e) {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    }
}

/// `x < b^e` with `b` known only as the base bracket.
pub(crate) fn below_base_power(x: &BigUint, e: usize) -> Verdict {
    let x = BigRational::from_integer(BigInt::from(x.clone()));
    let c = constants();
    if x < rational_pow(c.base_lo(), e) {
        Verdict::Pass
    } else if x >= rational_pow(c.base_hi(), e) {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    }
}

/// `x <= 4^e`, exactly.
pub(crate) fn at_most_four_power(x: &BigUint, e: usize) -> Verdict {
    Verdict::from_bool(*x <= BigUint::from(4u32).pow(e as u32))
}

#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub vertices: usize,
    pub simple: bool,
    pub tau: BigUint,
    pub ln_tau: f64,
    /// `(4C/pi) |V|`.
    pub lyons_bound: f64,
    /// `|V| - |top-left boundary|`.
    pub m: usize,
    pub lower_log: f64,
    pub upper_log: f64,
    /// `sum over k >= 2 of ln F(min(k, max_k)) |G^k|`.
    pub refined_upper_log: f64,
    pub max_k: usize,
    /// Number of vertices of each depth.
    pub level_set_sizes: BTreeMap<usize, usize>,
    pub lyons: Verdict,
    pub lower: Verdict,
    pub upper: Verdict,
    pub refined: Verdict,
}

impl BoundsReport {
    pub fn all_applicable_pass(&self) -> bool {
        [&self.lyons, &self.lower, &self.upper, &self.refined]
            .iter()
            .all(|v| matches!(v, Verdict::Pass | Verdict::NotApplicable(_)))
    }

    /// `key: value` lines.
    pub fn to_text(&self) -> String {
        let levels: Vec<String> = self
            .level_set_sizes
            .iter()
            .map(|(k, n)| format!("{k}:{n}"))
            .collect();
        let mut out = String::new();
        let _ = writeln!(out, "vertices: {}", self.vertices);
        let _ = writeln!(out, "simple: {}", self.simple);
        let _ = writeln!(out, "tau: {}", self.tau);
        let _ = writeln!(out, "ln_tau: {}", significant(self.ln_tau, 12));
        let _ = writeln!(out, "m: {}", self.m);
        let _ = writeln!(out, "lyons_bound: {}", significant(self.lyons_bound, 12));
        let _ = writeln!(out, "lower_log: {}", significant(self.lower_log, 12));
        let _ = writeln!(out, "upper_log: {}", significant(self.upper_log, 12));
        let _ = writeln!(out, "refined_upper_log: {}", significant(self.refined_upper_log, 12));
        let _ = writeln!(out, "max_k: {}", self.max_k);
        let _ = writeln!(out, "level_set_sizes: {}", levels.join(" "));
        let _ = writeln!(out, "lyons: {}", self.lyons);
        let _ = writeln!(out, "lower: {}", self.lower);
        let _ = writeln!(out, "upper: {}", self.upper);
        let _ = writeln!(out, "refined: {}", self.refined);
        out
    }

    pub fn csv_header() -> &'static str {
        "vertices,simple,ln_tau,m,lyons_bound,lower_log,upper_log,refined_upper_log,lyons,lower,upper,refined"
    }

    pub fn csv_row(&self) -> String {
        let short = |v: &Verdict| match v {
            Verdict::NotApplicable(_) => "not-applicable".to_string(),
            other => other.to_string(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.vertices,
            self.simple,
            significant(self.ln_tau, 12),
            self.m,
            significant(self.lyons_bound, 12),
            significant(self.lower_log, 12),
            significant(self.upper_log, 12),
            significant(self.refined_upper_log, 12),
            short(&self.lyons),
            short(&self.lower),
            short(&self.upper),
            short(&self.refined),
        )
    }
}

/// Evaluates every bound on a connected grid graph. Vertices deeper than
/// `max_k` use `F(max_k)`, which is still an upper bound because `F` is
/// non-increasing.
pub fn evaluate_bounds(g: &GridGraph, max_k: usize) -> Result<BoundsReport> {
    if max_k < 2 {
        return Err(Error::TooSmall { name: "max_k", min: 2, got: max_k as i64 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.num_vertices();
    let count = tau(g);
    let simple = g.check_simple().is_simple;
    let m = n - g.top_left_boundary().len();

    let mut level_set_sizes = BTreeMap::new();
    for &v in g.vertices() {
        *level_set_sizes.entry(depth(g, v)?).or_insert(0) += 1;
    }
    // capped depths, merged so each F is raised once
    let mut capped: BTreeMap<usize, usize> = BTreeMap::new();
    for (&k, &size) in level_set_sizes.range(2..) {
        *capped.entry(k.min(max_k)).or_insert(0) += size;
    }
    let mut refined_product = BigRational::one();
    let mut refined_upper_log = 0.0;
    for (&k, &size) in &capped {
        let f = f_value(k)?;
        refined_upper_log += ln_rational(&f) * size as f64;
        refined_product *= rational_pow(&f, size);
    }

    let not_simple = || Verdict::NotApplicable("non-simple".into());
    let (upper, refined) = if simple {
        let tau_rational = BigRational::from_integer(BigInt::from(count.value.clone()));
        (
            at_most_four_power(&count.value, m),
            Verdict::from_bool(tau_rational <= refined_product),
        )
    } else {
        (not_simple(), not_simple())
    };

    Ok(BoundsReport {
        vertices: n,
        simple,
        ln_tau: count.log_value,
        lyons_bound: bulk_limit() * n as f64,
        m,
        lower_log: m as f64 * ln_base(),
        upper_log: m as f64 * 4f64.ln(),
        refined_upper_log,
        max_k,
        level_set_sizes,
        lyons: below_base_power(&count.value, n),
        lower: at_least_base_power(&count.value, m),
        upper,
        refined,
        tau: count.value,
    })
}

/// `(n, ln tau / |V|)` for `n` by `n` vertex squares.
pub fn bulk_limit_trend(sizes: &[usize]) -> Result<Vec<(usize, f64)>> {
    if let Some(&n) = sizes.iter().find(|&&n| n < 2) {
        return Err(Error::TooSmall { name: "size", min: 2, got: n as i64 });
    }
    if sizes.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("sizes must increase".into()));
    }
    Ok(sizes
        .iter()
        .map(|&n| {
            let g = crate::shapes::rectangle(n as i64, n as i64);
            (n, tau(&g).log_value / (n * n) as f64)
        })
        .collect())
}
