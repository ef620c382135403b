use std::fmt::{self, Write as _};
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use gridtrees::bounds::evaluate_bounds;
use gridtrees::districting::{
    identity_from_score, run_ensemble, sandwich_from_score, scatter_csv, score_partition, EnsembleConfig,
};
use gridtrees::format::significant;
use gridtrees::randwalk::{
    depth, escape_triple, estimate_p, fk_table_csv, sample_spanning_trees, SamplerKind,
};
use gridtrees::{io, multiplier_profile, tau, Cell, Error, GridGraph, Vertex};

/// Failure classes that map to distinct exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input: exit code 2.
    Input(String),
    /// Valid input on which the computation is undefined: exit code 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyGraph
            | Error::NotLatticeEdge(..)
            | Error::MissingEndpoint(_)
            | Error::Parse { .. }
            | Error::InvalidPartition(_)
            | Error::InvalidArgument(_)
            | Error::TooSmall { .. }
            | Error::VertexNotInGraph(_) => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn parse_vertex(s: &str) -> std::result::Result<Vertex, String> {
    let (x, y) = s.split_once(',').ok_or("expected x,y")?;
    let coord = |c: &str| c.trim().parse::<i64>().map_err(|e| format!("{c:?}: {e}"));
    Ok(Vertex::new(coord(x)?, coord(y)?))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_grid(path: &Path) -> Result<GridGraph> {
    io::parse_grid(&read(path)?).map_err(|e| match e {
        Error::Parse { .. } | Error::EmptyGraph => CliError::Input(format!("{}: {e}", path.display())),
        other => other.into(),
    })
}

/// Writes through a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let fail = |e: std::io::Error| CliError::Input(format!("{}: {e}", path.display()));
    let name = path.file_name().ok_or_else(|| CliError::Input("output path has no file name".into()))?;
    let mut tmp = PathBuf::from(path);
    tmp.set_file_name(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    let mut file = fs::File::create(&tmp).map_err(fail)?;
    file.write_all(text.as_bytes()).map_err(fail)?;
    file.sync_all().map_err(fail)?;
    fs::rename(&tmp, path).map_err(fail)
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => write_atomic(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn count(input: &Path) -> Result<()> {
    let g = read_grid(input)?;
    let mut text = tau(&g).to_text();
    let components = g.components().len();
    if components > 1 {
        let _ = writeln!(text, "# disconnected: product over {components} components");
    }
    emit(&text, None)
}

pub fn multipliers(input: &Path, out: Option<&Path>) -> Result<()> {
    let g = read_grid(input)?;
    emit(&multiplier_profile(&g).heatmap_csv(), out)
}

pub fn bounds(input: &Path, max_k: usize) -> Result<()> {
    let g = read_grid(input)?;
    emit(&evaluate_bounds(&g, max_k)?.to_text(), None)
}

pub fn fk_table(max_k: usize, out: Option<&Path>) -> Result<()> {
    emit(&fk_table_csv(max_k)?, out)
}

pub fn partition(input: &Path, partition: &Path) -> Result<()> {
    let g = read_grid(input)?;
    let p = io::parse_partition(g, &read(partition)?)?;
    let s = score_partition(&p)?;
    let join = |items: Vec<String>| items.join(" ");
    let identity = identity_from_score(&s);
    let sandwich = sandwich_from_score(&s);
    let mut text = String::new();
    let _ = writeln!(text, "districts: {}", p.num_districts());
    let _ = writeln!(text, "cut_edges: {}", s.cut_edges);
    let _ = writeln!(text, "c1: {}", s.c1);
    let _ = writeln!(text, "district_areas: {}", join(s.district_areas.iter().map(|a| a.to_string()).collect()));
    let _ = writeln!(text, "district_trees: {}", join(s.district_trees.iter().map(|t| t.to_string()).collect()));
    let _ = writeln!(text, "spanning_score: {}", significant(s.spanning_score, 12));
    let _ = writeln!(text, "base_simple: {}", s.base_simple);
    let _ = writeln!(text, "district_simple: {}", join(s.simple_flags.iter().map(|f| f.to_string()).collect()));
    let _ = writeln!(text, "identity_predicted: {}", identity.predicted);
    let _ = writeln!(text, "identity: {}", identity.verdict);
    let _ = writeln!(text, "sandwich_lower: {}", sandwich.lower);
    let _ = writeln!(text, "sandwich_upper: {}", sandwich.upper);
    emit(&text, None)
}

pub fn ensemble(
    input: &Path,
    districts: usize,
    steps: usize,
    seed: u64,
    pop_tolerance: f64,
    out: Option<&Path>,
) -> Result<()> {
    let g = read_grid(input)?;
    let config = EnsembleConfig {
        districts,
        steps,
        seed,
        pop_tolerance,
    };
    emit(&scatter_csv(&run_ensemble(&g, &config)?), out)
}

pub fn sample_tree(input: &Path, seed: u64, samples: usize, out: Option<&Path>) -> Result<()> {
    let g = read_grid(input)?;
    let trees = sample_spanning_trees(&g, SamplerKind::Wilson, samples, seed, 1)?;
    let mut text = String::new();
    for (i, tree) in trees.iter().enumerate() {
        let _ = writeln!(text, "# tree {i}");
        for e in tree {
            let (a, b) = (e.first(), e.second());
            let _ = writeln!(text, "e {} {} {} {}", a.x, a.y, b.x, b.y);
        }
    }
    emit(&text, out)
}

pub fn escape(
    input: &Path,
    vertex: Option<Vertex>,
    sampling: Option<(usize, u64)>,
    out: Option<&Path>,
) -> Result<()> {
    let g = read_grid(input)?;
    let mut text = String::new();
    match vertex {
        Some(v) => {
            let t = escape_triple(&g, v)?;
            let _ = writeln!(text, "vertex: {v}");
            let _ = writeln!(text, "depth: {}", depth(&g, v)?);
            let _ = writeln!(text, "e: {}", t.e);
            let _ = writeln!(text, "q: {}", t.q);
            let _ = writeln!(text, "p: {}", t.p);
            let _ = writeln!(text, "multiplier: {}", t.multiplier());
            if let Some((samples, seed)) = sampling {
                let est = estimate_p(&g, v, samples, seed)?;
                let _ = writeln!(text, "p_estimate: {}", significant(est.estimate, 12));
                let _ = writeln!(text, "p_sigma: {}", significant(est.sigma, 12));
                let _ = writeln!(text, "within_4_sigma: {}", est.within_sigmas(4.0));
            }
        }
        None => {
            if sampling.is_some() {
                return Err(CliError::Input("--samples needs --vertex".into()));
            }
            text.push_str("x,y,depth,e,q,p,multiplier\n");
            for &v in g.vertices().iter().filter(|&&v| g.has_cell(Cell::new(v))) {
                let t = escape_triple(&g, v)?;
                let _ = writeln!(
                    text,
                    "{},{},{},{},{},{},{}",
                    v.x,
                    v.y,
                    depth(&g, v)?,
                    t.e,
                    t.q,
                    t.p,
                    t.multiplier()
                );
            }
        }
    }
    emit(&text, out)
}
