use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;

use commands::CliError;

#[derive(Parser, Debug)]
#[command(name = "gridtrees", version, about = "Spanning trees, multipliers and bounds for grid graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spanning-tree count of a grid file.
    Count {
        #[arg(long)]
        input: PathBuf,
    },
    /// Multiplier of every vertex as a heatmap CSV.
    Multipliers {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Every tree-count bound with its verdict.
    Bounds {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_k: usize,
    },
    /// Exact values of F(2), ..., F(max_k).
    FkTable {
        #[arg(long)]
        max_k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Score a district partition and check the cut-edge relations.
    Partition {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        partition: PathBuf,
    },
    /// Recombination ensemble exported as a scatter CSV.
    Ensemble {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        districts: usize,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0.05)]
        pop_tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Uniform spanning trees, written as edge records.
    SampleTree {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact escape probabilities, optionally checked by sampling.
    Escape {
        #[arg(long)]
        input: PathBuf,
        /// Single vertex `x,y`; all eligible vertices when omitted.
        #[arg(long, value_parser = commands::parse_vertex, allow_hyphen_values = true)]
        vertex: Option<gridtrees::Vertex>,
        #[arg(long, requires = "seed")]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Count { input } => commands::count(&input),
        Command::Multipliers { input, out } => commands::multipliers(&input, out.as_deref()),
        Command::Bounds { input, max_k } => commands::bounds(&input, max_k),
        Command::FkTable { max_k, out } => commands::fk_table(max_k, out.as_deref()),
        Command::Partition { input, partition } => commands::partition(&input, &partition),
        Command::Ensemble {
            input,
            districts,
            steps,
            seed,
            pop_tolerance,
            out,
        } => commands::ensemble(&input, districts, steps, seed, pop_tolerance, out.as_deref()),
        Command::SampleTree {
            input,
            seed,
            samples,
            out,
        } => commands::sample_tree(&input, seed, samples, out.as_deref()),
        Command::Escape {
            input,
            vertex,
            samples,
            seed,
            out,
        } => commands::escape(&input, vertex, samples.zip(seed), out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn run_args(args: &[&str]) -> Result<(), CliError> {
        run(Cli::try_parse_from(std::iter::once("gridtrees").chain(args.iter().copied())).unwrap())
    }

    fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
        let path = dir.path().join(name);
        fs::write(&path, text).unwrap();
        path.to_string_lossy().into_owned()
    }

    const SQUARE_4X4: &str = "v 0 0\nv 1 0\nv 2 0\nv 3 0\nv 0 1\nv 1 1\nv 2 1\nv 3 1\n\
                              v 0 2\nv 1 2\nv 2 2\nv 3 2\nv 0 3\nv 1 3\nv 2 3\nv 3 3\n";

    #[test]
    fn exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let bad = write(&dir, "bad.txt", "v 0 0\nv 1 zero\n");
        let err = run_args(&["count", "--input", &bad]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("line 2"));
        assert_eq!(run_args(&["fk-table", "--max-k", "1"]).unwrap_err().exit_code(), 2);
        let missing = dir.path().join("absent.txt");
        assert_eq!(
            run_args(&["count", "--input", missing.to_str().unwrap()]).unwrap_err().exit_code(),
            2
        );

        let grid = write(&dir, "g.txt", "v 0 0\nv 1 0\nv 2 0\n");
        let split = write(&dir, "p.txt", "0 0 1\n1 0 2\n2 0 1\n");
        let err = run_args(&["partition", "--input", &grid, "--partition", &split]).unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert_eq!(err.to_string(), "district 1 disconnected");

        let gap = write(&dir, "gap.txt", "v 0 0\nv 2 0\n");
        assert_eq!(run_args(&["bounds", "--input", &gap]).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn writes_outputs() {
        let dir = tempfile::tempdir().unwrap();
        let grid = write(&dir, "sq.txt", SQUARE_4X4);
        let out = dir.path().join("heat.csv");
        run_args(&["multipliers", "--input", &grid, "--out", out.to_str().unwrap()]).unwrap();
        let csv = fs::read_to_string(&out).unwrap();
        assert_eq!(csv.lines().count(), 17);
        assert!(csv.starts_with("x,y,multiplier\n0,3,1.000000000000\n"));

        let scatter = dir.path().join("scatter.csv");
        let args = [
            "ensemble", "--input", &grid, "--districts", "2", "--steps", "0", "--seed", "3", "--out",
            scatter.to_str().unwrap(),
        ];
        run_args(&args).unwrap();
        let csv = fs::read_to_string(&scatter).unwrap();
        assert!(csv.starts_with("# intercept: 10\n"));
        let last = csv.lines().last().unwrap();
        assert!(last.starts_with("0,4,") && last.ends_with(",true"), "{last}");

        let trees = dir.path().join("trees.txt");
        run_args(&["sample-tree", "--input", &grid, "--seed", "1", "--samples", "2", "--out", trees.to_str().unwrap()])
            .unwrap();
        let text = fs::read_to_string(&trees).unwrap();
        assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 30);
        // no temporary files left behind
        let leftovers = fs::read_dir(dir.path())
            .unwrap()
            .filter(|e| e.as_ref().unwrap().file_name().to_string_lossy().ends_with(".tmp"))
            .count();
        assert_eq!(leftovers, 0);
    }

    #[test]
    fn sampling_commands_need_a_seed() {
        assert!(Cli::try_parse_from(["gridtrees", "sample-tree", "--input", "x"]).is_err());
        assert!(Cli::try_parse_from(["gridtrees", "ensemble", "--input", "x", "--districts", "2", "--steps", "1"]).is_err());
        assert!(Cli::try_parse_from(["gridtrees", "escape", "--input", "x", "--samples", "10"]).is_err());
        assert!(Cli::try_parse_from(["gridtrees", "escape", "--input", "x", "--vertex", "-1,2"]).is_ok());
    }
}
