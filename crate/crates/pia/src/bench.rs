//! Benchmark harness: run a suite of solver configurations over a polygon
//! corpus, classify radius errors against the oracle into buckets, and
//! aggregate runtimes into a comparison table.

use std::time::Instant;

use crate::error::PiaError;
use crate::geometry::Polygon;
use crate::grid_search::{solve_grid, GridConfig};
use crate::lp::solve_chebyshev;
use crate::oracle::{brute_force_pia, triangle_incenter};
use crate::random_search::{solve_random, RandomConfig};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Relative radius error below which a solution counts as exact.
pub const EXACT_EPS: f64 = 1e-12;
/// Lattice resolution of the brute-force oracle used for non-triangles.
pub const ORACLE_RESOLUTION: usize = 4001;
/// Feasible solvers may never exceed the oracle radius by more than this.
pub const DOMINANCE_EPS: f64 = 1e-9;

/// Relative-error buckets. The four reported ranges plus `AtMost1Pct` so the
/// partition of [0, inf) is complete and rows sum to 100%.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorBucket {
    /// Relative error below 1e-12.
    Exact,
    /// At most 0.01%.
    AtMost001Pct,
    /// At most 0.1%.
    AtMost01Pct,
    /// At most 1%.
    AtMost1Pct,
    /// More than 1%.
    Over1Pct,
}

impl ErrorBucket {
    pub fn index(self) -> usize {
        match self {
            ErrorBucket::Exact => 0,
            ErrorBucket::AtMost001Pct => 1,
            ErrorBucket::AtMost01Pct => 2,
            ErrorBucket::AtMost1Pct => 3,
            ErrorBucket::Over1Pct => 4,
        }
    }
}

/// Bucket of the relative radius error `|found - exact| / exact`.
pub fn classify_error(found: f64, exact: f64) -> ErrorBucket {
    debug_assert!(exact > 0.0);
    let rel = (found - exact).abs() / exact;
    if rel < EXACT_EPS {
        ErrorBucket::Exact
    } else if rel <= 1e-4 {
        ErrorBucket::AtMost001Pct
    } else if rel <= 1e-3 {
        ErrorBucket::AtMost01Pct
    } else if rel <= 1e-2 {
        ErrorBucket::AtMost1Pct
    } else {
        ErrorBucket::Over1Pct
    }
}

/// One suite entry. For `Random`, the stored seed is a base seed; each
/// (instance, repeat) pair solves under a seed derived from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SolverSpec {
    Grid(GridConfig),
    Random(RandomConfig),
    Lp,
}

impl SolverSpec {
    pub fn label(&self) -> String {
        match self {
            SolverSpec::Grid(cfg) => format!("grid n={} m={}", cfg.n, cfg.m),
            SolverSpec::Random(cfg) => format!("random k={}", cfg.k),
            SolverSpec::Lp => "lp".to_string(),
        }
    }
}

/// The seven-entry suite mirroring the comparative experiment: grid at
/// 12/15/20 nodes per axis, randomized at k = 15/30/50, and the LP solver.
pub fn default_suite(min_accuracy: f64, base_seed: u64) -> Vec<SolverSpec> {
    vec![
        SolverSpec::Grid(GridConfig::new(12, 12, min_accuracy)),
        SolverSpec::Grid(GridConfig::new(15, 15, min_accuracy)),
        SolverSpec::Grid(GridConfig::new(20, 20, min_accuracy)),
        SolverSpec::Random(RandomConfig::new(15, min_accuracy, base_seed)),
        SolverSpec::Random(RandomConfig::new(30, min_accuracy, base_seed)),
        SolverSpec::Random(RandomConfig::new(50, min_accuracy, base_seed)),
        SolverSpec::Lp,
    ]
}

/// Aggregated outcome for one suite entry.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub label: String,
    pub bucket_counts: [u64; 5],
    pub failures: u64,
    pub dominance_violations: u64,
    pub runtimes_us: Vec<f64>,
}

impl BenchRow {
    pub fn classified(&self) -> u64 {
        self.bucket_counts.iter().sum()
    }

    /// Bucket shares in percent; sums to 100 when any solve succeeded.
    pub fn bucket_percentages(&self) -> [f64; 5] {
        let total = self.classified().max(1) as f64;
        let mut out = [0.0; 5];
        for (o, &c) in out.iter_mut().zip(&self.bucket_counts) {
            *o = 100.0 * c as f64 / total;
        }
        out
    }

    pub fn median_runtime_us(&self) -> f64 {
        if self.runtimes_us.is_empty() {
            return f64::NAN;
        }
        let mut sorted = self.runtimes_us.clone();
        sorted.sort_by(f64::total_cmp);
        let n = sorted.len();
        if n % 2 == 1 {
            sorted[n / 2]
        } else {
            0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
        }
    }

    pub fn mean_runtime_us(&self) -> f64 {
        if self.runtimes_us.is_empty() {
            return f64::NAN;
        }
        self.runtimes_us.iter().sum::<f64>() / self.runtimes_us.len() as f64
    }
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub instances: usize,
    pub repeats: usize,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "algorithm,exact_pct,le_0_01pct,le_0_1pct,le_1pct,over_1pct,\
             median_runtime_us,mean_runtime_us,failures\n",
        );
        for row in &self.rows {
            let p = row.bucket_percentages();
            out.push_str(&format!(
                "{},{:.4},{:.4},{:.4},{:.4},{:.4},{:.3},{:.3},{}\n",
                row.label,
                p[0],
                p[1],
                p[2],
                p[3],
                p[4],
                row.median_runtime_us(),
                row.mean_runtime_us(),
                row.failures
            ));
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<16} {:>9} {:>9} {:>9} {:>9} {:>9} {:>12} {:>12} {:>8}\n",
            "algorithm",
            "exact%",
            "<=0.01%",
            "<=0.1%",
            "<=1%",
            ">1%",
            "median_us",
            "mean_us",
            "failures"
        );
        for row in &self.rows {
            let p = row.bucket_percentages();
            out.push_str(&format!(
                "{:<16} {:>9.2} {:>9.2} {:>9.2} {:>9.2} {:>9.2} {:>12.1} {:>12.1} {:>8}\n",
                row.label,
                p[0],
                p[1],
                p[2],
                p[3],
                p[4],
                row.median_runtime_us(),
                row.mean_runtime_us(),
                row.failures
            ));
        }
        out
    }
}

/// Oracle ("exact") radius: analytic incenter for triangles, dense lattice
/// otherwise.
pub fn oracle_radius(poly: &Polygon) -> Result<f64, PiaError> {
    if poly.len() == 3 {
        Ok(triangle_incenter(poly)?.radius)
    } else {
        Ok(brute_force_pia(poly, ORACLE_RESOLUTION)?.radius)
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}

/// Per-(instance, repeat) seed for randomized suite entries.
pub fn derived_seed(base: u64, instance: usize, repeat: usize) -> u64 {
    splitmix64(base ^ splitmix64((instance as u64) << 20 | repeat as u64))
}

struct InstanceOutcome {
    // One slot per suite entry.
    buckets: Vec<[u64; 5]>,
    failures: Vec<u64>,
    violations: Vec<u64>,
    runtimes_us: Vec<Vec<f64>>,
}

fn run_instance(
    idx: usize,
    poly: &Polygon,
    suite: &[SolverSpec],
    repeats: usize,
) -> Result<InstanceOutcome, PiaError> {
    let exact = oracle_radius(poly)?;
    let mut out = InstanceOutcome {
        buckets: vec![[0; 5]; suite.len()],
        failures: vec![0; suite.len()],
        violations: vec![0; suite.len()],
        runtimes_us: vec![Vec::with_capacity(repeats); suite.len()],
    };
    for (s, spec) in suite.iter().enumerate() {
        for rep in 0..repeats {
            let start = Instant::now();
            let solved = match spec {
                SolverSpec::Grid(cfg) => solve_grid(poly, cfg),
                SolverSpec::Random(cfg) => {
                    let mut cfg = *cfg;
                    cfg.seed = derived_seed(cfg.seed, idx, rep);
                    solve_random(poly, &cfg)
                }
                SolverSpec::Lp => solve_chebyshev(poly),
            };
            let elapsed = start.elapsed().as_secs_f64() * 1e6;
            out.runtimes_us[s].push(elapsed);
            match solved {
                Ok(res) => {
                    if res.radius > exact + DOMINANCE_EPS {
                        out.violations[s] += 1;
                    }
                    out.buckets[s][classify_error(res.radius, exact).index()] += 1;
                }
                Err(_) => out.failures[s] += 1,
            }
        }
    }
    Ok(out)
}

/// Solve every corpus instance `repeats` times per suite entry and aggregate
/// buckets, failures and runtimes. Instances run in parallel under the
/// `parallel` feature; bucket counts are order-independent so the report is
/// reproducible either way (runtimes excepted).
pub fn run_benchmark(
    corpus: &[Polygon],
    suite: &[SolverSpec],
    repeats: usize,
) -> Result<BenchReport, PiaError> {
    assert!(!corpus.is_empty() && repeats >= 1);

    #[cfg(feature = "parallel")]
    let outcomes: Result<Vec<InstanceOutcome>, PiaError> = corpus
        .par_iter()
        .enumerate()
        .map(|(idx, poly)| run_instance(idx, poly, suite, repeats))
        .collect();

    #[cfg(not(feature = "parallel"))]
    let outcomes: Result<Vec<InstanceOutcome>, PiaError> = corpus
        .iter()
        .enumerate()
        .map(|(idx, poly)| run_instance(idx, poly, suite, repeats))
        .collect();

    let outcomes = outcomes?;
    let rows = suite
        .iter()
        .enumerate()
        .map(|(s, spec)| {
            let mut row = BenchRow {
                label: spec.label(),
                bucket_counts: [0; 5],
                failures: 0,
                dominance_violations: 0,
                runtimes_us: Vec::with_capacity(corpus.len() * repeats),
            };
            for o in &outcomes {
                for (acc, c) in row.bucket_counts.iter_mut().zip(&o.buckets[s]) {
                    *acc += c;
                }
                row.failures += o.failures[s];
                row.dominance_violations += o.violations[s];
                row.runtimes_us.extend_from_slice(&o.runtimes_us[s]);
            }
            row
        })
        .collect();

    Ok(BenchReport {
        rows,
        instances: corpus.len(),
        repeats,
    })
}
