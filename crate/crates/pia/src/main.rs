//! Command-line front end: solve a single polygon, generate corpora, run the
//! benchmark suite, and emit SVG visualizations.
//!
//! Exit codes: 0 success, 1 input error, 2 solver error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use pia::bench::{default_suite, run_benchmark, SolverSpec};
use pia::geometry::{Point, Polygon, Region};
use pia::grid_search::{solve_grid_observed, GridConfig, PiaResult};
use pia::lp::solve_chebyshev;
use pia::observe::SolveObserver;
use pia::polygen::{convex_corpus, triangle_corpus};
use pia::random_search::{solve_random_observed, RandomConfig};
use pia::{svg, PiaError};

#[derive(Parser)]
#[command(name = "pia", about = "Largest inscribed circle (pole of inaccessibility) solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Grid,
    Random,
    Lp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Shape {
    Triangle,
    Convex,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one polygon and print the result as JSON.
    Solve {
        #[arg(long)]
        algorithm: Algorithm,
        /// Polygon file: a JSON array of [x, y] vertex pairs.
        #[arg(long)]
        input: PathBuf,
        /// Grid columns.
        #[arg(long, default_value_t = 12)]
        n: usize,
        /// Grid rows (defaults to --n).
        #[arg(long)]
        m: Option<usize>,
        /// Consecutive-miss threshold for the randomized solver.
        #[arg(long, default_value_t = 50)]
        k: u32,
        /// Termination accuracy for the search solvers.
        #[arg(long, default_value_t = 1e-6)]
        accuracy: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write an SVG of the polygon and result circle.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Overlay every evaluated node on the SVG.
        #[arg(long)]
        show_nodes: bool,
    },
    /// Generate a polygon corpus, one JSON vertex array per line.
    Gen {
        #[arg(long)]
        shape: Shape,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex count for --shape convex.
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a solver suite over a corpus and write a CSV report.
    Bench {
        #[arg(long)]
        corpus: PathBuf,
        /// "default" (grid 12/15/20, random 15/30/50, lp) or a comma list of
        /// grid:N, random:K, lp.
        #[arg(long, default_value = "default")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        /// Termination accuracy for the search solvers.
        #[arg(long, default_value_t = 1e-6)]
        accuracy: f64,
        /// Base seed for randomized suite entries.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV output path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn input_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn solver_err(err: PiaError) -> ExitCode {
    eprintln!("solver error: {err}");
    ExitCode::from(2)
}

fn parse_polygon_line(line: &str) -> Result<Polygon, String> {
    let pairs: Vec<[f64; 2]> =
        serde_json::from_str(line).map_err(|e| format!("bad polygon JSON: {e}"))?;
    let vertices = pairs.iter().map(|[x, y]| Point::new(*x, *y)).collect();
    Polygon::new(vertices).map_err(|e| e.to_string())
}

fn read_polygon(path: &PathBuf) -> Result<Polygon, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| format!("{}: empty file", path.display()))?;
    parse_polygon_line(line)
}

fn read_corpus(path: &PathBuf) -> Result<Vec<Polygon>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let polys: Result<Vec<Polygon>, String> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_polygon_line)
        .collect();
    let polys = polys?;
    if polys.is_empty() {
        return Err(format!("{}: empty corpus", path.display()));
    }
    Ok(polys)
}

fn polygon_to_line(poly: &Polygon) -> String {
    let pairs: Vec<[f64; 2]> = poly.vertices().iter().map(|p| [p.x, p.y]).collect();
    serde_json::to_string(&pairs).expect("serializable")
}

fn parse_suite(spec: &str, accuracy: f64, seed: u64) -> Result<Vec<SolverSpec>, String> {
    if spec == "default" {
        return Ok(default_suite(accuracy, seed));
    }
    spec.split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok == "lp" {
                Ok(SolverSpec::Lp)
            } else if let Some(n) = tok.strip_prefix("grid:") {
                let n: usize = n.parse().map_err(|_| format!("bad suite entry: {tok}"))?;
                Ok(SolverSpec::Grid(GridConfig::new(n, n, accuracy)))
            } else if let Some(k) = tok.strip_prefix("random:") {
                let k: u32 = k.parse().map_err(|_| format!("bad suite entry: {tok}"))?;
                Ok(SolverSpec::Random(RandomConfig::new(k, accuracy, seed)))
            } else {
                Err(format!("bad suite entry: {tok}"))
            }
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    algorithm: Algorithm,
    input: PathBuf,
    n: usize,
    m: Option<usize>,
    k: u32,
    accuracy: f64,
    seed: u64,
    svg_path: Option<PathBuf>,
    show_nodes: bool,
) -> ExitCode {
    let poly = match read_polygon(&input) {
        Ok(p) => p,
        Err(e) => return input_err(e),
    };
    let mut nodes: Vec<Point> = Vec::new();
    let mut collect = |p: Point| nodes.push(p);
    let mut observer = SolveObserver {
        on_candidate: if show_nodes { Some(&mut collect) } else { None },
        on_incumbent: None,
    };

    let start = Instant::now();
    let (result, name): (Result<PiaResult, PiaError>, &str) = match algorithm {
        Algorithm::Grid => {
            let cfg = GridConfig::new(n, m.unwrap_or(n), accuracy);
            (solve_grid_observed(&poly, &cfg, &mut observer), "grid")
        }
        Algorithm::Random => {
            let cfg = RandomConfig::new(k, accuracy, seed);
            (solve_random_observed(&poly, &cfg, &mut observer), "random")
        }
        Algorithm::Lp => (solve_chebyshev(&poly), "lp"),
    };
    let elapsed_us = start.elapsed().as_secs_f64() * 1e6;

    let result = match result {
        Ok(r) => r,
        Err(e) => return solver_err(e),
    };

    println!(
        "{}",
        serde_json::json!({
            "x": result.center.x,
            "y": result.center.y,
            "radius": result.radius,
            "iterations": result.iterations,
            "nodes_evaluated": result.nodes_evaluated,
            "algorithm": name,
            "elapsed_us": elapsed_us,
        })
    );

    if let Some(path) = svg_path {
        let doc = svg::render(&poly, result.center, result.radius, &nodes);
        if let Err(e) = fs::write(&path, doc) {
            return input_err(format!("{}: {e}", path.display()));
        }
    }
    ExitCode::SUCCESS
}

fn cmd_gen(shape: Shape, count: usize, seed: u64, n: usize, out: PathBuf) -> ExitCode {
    if count < 1 {
        return input_err("--count must be at least 1");
    }
    let bounds = Region::new(0.0, 1.0, 0.0, 1.0);
    let corpus = match shape {
        Shape::Triangle => triangle_corpus(seed, count, &bounds),
        Shape::Convex => convex_corpus(seed, count, n, &bounds),
    };
    let corpus = match corpus {
        Ok(c) => c,
        Err(e) => return solver_err(e),
    };
    let mut text = String::new();
    for poly in &corpus {
        text.push_str(&polygon_to_line(poly));
        text.push('\n');
    }
    if let Err(e) = fs::write(&out, text) {
        return input_err(format!("{}: {e}", out.display()));
    }
    ExitCode::SUCCESS
}

fn cmd_bench(
    corpus: PathBuf,
    suite: String,
    repeats: usize,
    accuracy: f64,
    seed: u64,
    out: Option<PathBuf>,
) -> ExitCode {
    let polys = match read_corpus(&corpus) {
        Ok(p) => p,
        Err(e) => return input_err(e),
    };
    let suite = match parse_suite(&suite, accuracy, seed) {
        Ok(s) => s,
        Err(e) => return input_err(e),
    };
    if repeats < 1 {
        return input_err("--repeats must be at least 1");
    }
    let report = match run_benchmark(&polys, &suite, repeats) {
        Ok(r) => r,
        Err(e) => return solver_err(e),
    };
    print!("{}", report.to_table());
    if let Some(path) = out {
        if let Err(e) = fs::write(&path, report.to_csv()) {
            return input_err(format!("{}: {e}", path.display()));
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Solve {
            algorithm,
            input,
            n,
            m,
            k,
            accuracy,
            seed,
            svg,
            show_nodes,
        } => cmd_solve(algorithm, input, n, m, k, accuracy, seed, svg, show_nodes),
        Command::Gen {
            shape,
            count,
            seed,
            n,
            out,
        } => cmd_gen(shape, count, seed, n, out),
        Command::Bench {
            corpus,
            suite,
            repeats,
            accuracy,
            seed,
            out,
        } => cmd_bench(corpus, suite, repeats, accuracy, seed, out),
    }
}
