//! Dense two-phase primal simplex for small LPs in standard form:
//! maximize c.v subject to A.v <= b, v >= 0.
//!
//! Pivoting uses Dantzig's rule and falls back to Bland's rule after
//! 2 * (rows + cols) pivots so the solver terminates on degenerate inputs.
//! [`enumerate_vertices_oracle`] is an independent brute-force check used by
//! the test suite; it never shares code with the tableau path.

use crate::error::PiaError;

/// Optimality / feasibility tolerance.
const OPT_EPS: f64 = 1e-9;
/// Minimum admissible pivot magnitude.
const PIVOT_EPS: f64 = 1e-11;
/// Box used by the vertex-enumeration oracle to detect unboundedness.
const ORACLE_BOX: f64 = 1e7;

/// A standard-form LP: maximize `objective . v` subject to one `<=` row per
/// constraint, variables implicitly nonnegative.
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    pub objective: Vec<f64>,
    /// (coefficient row, right-hand side) pairs, relation `<=`.
    pub constraints: Vec<(Vec<f64>, f64)>,
}

impl LpProblem {
    pub fn new(objective: Vec<f64>, constraints: Vec<(Vec<f64>, f64)>) -> Self {
        let n = objective.len();
        debug_assert!(constraints.iter().all(|(row, _)| row.len() == n));
        LpProblem {
            objective,
            constraints,
        }
    }

    pub fn variable_count(&self) -> usize {
        self.objective.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Variable values when `Optimal`, empty otherwise.
    pub variables: Vec<f64>,
    pub objective: f64,
    /// Simplex pivots performed (both phases).
    pub pivots: u32,
}

impl LpSolution {
    fn non_optimal(status: LpStatus, pivots: u32) -> Self {
        LpSolution {
            status,
            variables: Vec::new(),
            objective: f64::NAN,
            pivots,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<f64>>,
    rhs: Vec<f64>,
    basis: Vec<usize>,
    n_structural: usize,
    art_start: usize,
    pivots: u32,
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col];
        for v in &mut self.rows[row] {
            *v /= p;
        }
        self.rhs[row] /= p;
        for i in 0..self.rows.len() {
            if i == row {
                continue;
            }
            let f = self.rows[i][col];
            if f == 0.0 {
                continue;
            }
            for j in 0..self.cols() {
                self.rows[i][j] -= f * self.rows[row][j];
            }
            self.rhs[i] -= f * self.rhs[row];
        }
        self.basis[row] = col;
        self.pivots += 1;
    }

    /// Runs simplex with cost vector `cost` (indexed over all columns) until
    /// no improving column remains. `allow_artificial` gates artificial
    /// columns from entering the basis.
    fn run_phase(
        &mut self,
        cost: &[f64],
        allow_artificial: bool,
        mut trace: Option<&mut Vec<f64>>,
    ) -> Result<PhaseEnd, PiaError> {
        let m = self.rows.len();
        let cols = self.cols();
        let bland_after = 2 * (m + cols) as u32;
        let start = self.pivots;
        // Bland's rule caps the pivot count at the number of bases; this cap
        // only trips on a genuine defect.
        let cap = start + 50_000;
        loop {
            if self.pivots >= cap {
                return Err(PiaError::NumericalBreakdown);
            }
            // Reduced costs: r_j = c_j - c_B . B^-1 A_j.
            let mut entering: Option<(usize, f64)> = None;
            let bland = self.pivots - start >= bland_after;
            for j in 0..cols {
                if !allow_artificial && j >= self.art_start {
                    continue;
                }
                if self.basis.contains(&j) {
                    continue;
                }
                let mut r = cost[j];
                for i in 0..m {
                    let cb = cost[self.basis[i]];
                    if cb != 0.0 {
                        r -= cb * self.rows[i][j];
                    }
                }
                if r > OPT_EPS {
                    if bland {
                        entering = Some((j, r));
                        break;
                    }
                    match entering {
                        Some((_, best)) if best >= r => {}
                        _ => entering = Some((j, r)),
                    }
                }
            }
            let Some((e, _)) = entering else {
                return Ok(PhaseEnd::Optimal);
            };

            // Phase 2 only: prefer kicking out a basic artificial sitting at
            // zero. Pivoting on its row keeps every rhs unchanged, and since
            // artificials never re-enter this fires at most once each.
            let art_row = if allow_artificial {
                None
            } else {
                (0..m).find(|&i| {
                    self.basis[i] >= self.art_start
                        && self.rhs[i].abs() <= OPT_EPS
                        && self.rows[i][e].abs() > 1e-9
                })
            };
            let leaving = art_row.or_else(|| {
                let mut best: Option<(usize, f64)> = None;
                for i in 0..m {
                    let a = self.rows[i][e];
                    if a > PIVOT_EPS {
                        let ratio = self.rhs[i] / a;
                        let better = match best {
                            None => true,
                            Some((bi, br)) => {
                                ratio < br - OPT_EPS
                                    || ((ratio - br).abs() <= OPT_EPS
                                        && self.basis[i] < self.basis[bi])
                            }
                        };
                        if better {
                            best = Some((i, ratio));
                        }
                    }
                }
                best.map(|(i, _)| i)
            });
            match leaving {
                Some(i) => self.pivot(i, e),
                None => {
                    let max_entry = (0..m).map(|i| self.rows[i][e]).fold(f64::MIN, f64::max);
                    if max_entry <= 0.0 {
                        return Ok(PhaseEnd::Unbounded);
                    }
                    // Positive entries exist but are all below pivot
                    // tolerance.
                    return Err(PiaError::NumericalBreakdown);
                }
            }
            if let Some(t) = trace.as_deref_mut() {
                let z: f64 = self
                    .basis
                    .iter()
                    .zip(&self.rhs)
                    .map(|(&b, &v)| cost[b] * v)
                    .sum();
                t.push(z);
            }
        }
    }

    fn variable_values(&self) -> Vec<f64> {
        let mut v = vec![0.0; self.n_structural];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n_structural {
                v[b] = self.rhs[i];
            }
        }
        v
    }
}

pub fn solve_lp(p: &LpProblem) -> Result<LpSolution, PiaError> {
    solve_lp_traced(p, None)
}

/// [`solve_lp`] recording the phase-2 objective value after every pivot into
/// `trace` (non-decreasing by construction; asserted in tests).
pub fn solve_lp_traced(
    p: &LpProblem,
    mut trace: Option<&mut Vec<f64>>,
) -> Result<LpSolution, PiaError> {
    let n = p.variable_count();
    let m = p.constraints.len();
    let mut need_artificial = Vec::new();
    for (i, (_, b)) in p.constraints.iter().enumerate() {
        if *b < 0.0 {
            need_artificial.push(i);
        }
    }
    let n_art = need_artificial.len();
    let art_start = n + m;
    let cols = n + m + n_art;

    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art_idx = 0;
    for (i, (coeffs, b)) in p.constraints.iter().enumerate() {
        let mut row = vec![0.0; cols];
        row[..n].copy_from_slice(coeffs);
        row[n + i] = 1.0;
        if *b < 0.0 {
            for v in &mut row[..n + m] {
                *v = -*v;
            }
            row[art_start + art_idx] = 1.0;
            art_idx += 1;
            basis.push(art_start + art_idx - 1);
            rhs.push(-b);
        } else {
            basis.push(n + i);
            rhs.push(*b);
        }
        rows.push(row);
    }

    let mut tab = Tableau {
        rows,
        rhs,
        basis,
        n_structural: n,
        art_start,
        pivots: 0,
    };

    if n_art > 0 {
        // Phase 1: maximize minus the sum of artificials.
        let mut cost1 = vec![0.0; cols];
        for c in &mut cost1[art_start..] {
            *c = -1.0;
        }
        match tab.run_phase(&cost1, true, None)? {
            PhaseEnd::Optimal => {}
            // The phase-1 objective is bounded above by zero.
            PhaseEnd::Unbounded => return Err(PiaError::NumericalBreakdown),
        }
        let art_sum: f64 = tab
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= art_start)
            .map(|(i, _)| tab.rhs[i])
            .sum();
        if art_sum > 1e-7 {
            return Ok(LpSolution::non_optimal(LpStatus::Infeasible, tab.pivots));
        }
        // Drive remaining zero-valued artificials out of the basis where a
        // usable pivot exists; redundant rows keep theirs at zero.
        for i in 0..m {
            if tab.basis[i] >= art_start {
                if let Some(j) = (0..art_start)
                    .find(|&j| !tab.basis.contains(&j) && tab.rows[i][j].abs() > 1e-9)
                {
                    tab.pivot(i, j);
                }
            }
        }
    }

    let mut cost2 = vec![0.0; cols];
    cost2[..n].copy_from_slice(&p.objective);
    let end = tab.run_phase(&cost2, false, trace.as_deref_mut())?;
    match end {
        PhaseEnd::Unbounded => Ok(LpSolution::non_optimal(LpStatus::Unbounded, tab.pivots)),
        PhaseEnd::Optimal => {
            let variables = tab.variable_values();
            let objective = p
                .objective
                .iter()
                .zip(&variables)
                .map(|(c, v)| c * v)
                .sum();
            Ok(LpSolution {
                status: LpStatus::Optimal,
                variables,
                objective,
                pivots: tab.pivots,
            })
        }
    }
}

/// Brute-force ground truth for desk-scale LPs (<= 8 constraints, <= 4
/// variables): intersect every size-n subset of the constraint, nonnegativity
/// and detection-box hyperplanes, keep feasible vertices, return the best.
pub fn enumerate_vertices_oracle(p: &LpProblem) -> Result<LpSolution, PiaError> {
    let n = p.variable_count();
    let m = p.constraints.len();
    assert!(m <= 8 && n <= 4, "oracle is desk-scale only");

    // Hyperplane list: constraint rows, then x_j >= 0, then x_j <= BOX.
    let mut planes: Vec<(Vec<f64>, f64)> = p.constraints.clone();
    for j in 0..n {
        let mut row = vec![0.0; n];
        row[j] = -1.0;
        planes.push((row.clone(), 0.0));
        row[j] = 1.0;
        planes.push((row, ORACLE_BOX));
    }

    let feasible = |v: &[f64]| -> bool {
        v.iter().all(|&x| x >= -OPT_EPS && x <= ORACLE_BOX + 1e-3)
            && p.constraints
                .iter()
                .all(|(row, b)| row.iter().zip(v).map(|(a, x)| a * x).sum::<f64>() <= b + OPT_EPS)
    };

    let mut best: Option<(f64, Vec<f64>, bool)> = None;
    let total = planes.len();
    // Iterate all n-combinations of plane indices.
    fn combos(
        total: usize,
        k: usize,
        start: usize,
        subset: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if subset.len() == k {
            out.push(subset.clone());
            return;
        }
        for i in start..total {
            subset.push(i);
            combos(total, k, i + 1, subset, out);
            subset.pop();
        }
    }
    let mut subset = Vec::new();
    let mut all = Vec::new();
    combos(total, n, 0, &mut subset, &mut all);

    for combo in all {
        let mut a = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        for &idx in &combo {
            a.push(planes[idx].0.clone());
            b.push(planes[idx].1);
        }
        let Some(v) = solve_dense(&mut a, &mut b) else {
            continue;
        };
        if !feasible(&v) {
            continue;
        }
        let obj: f64 = p.objective.iter().zip(&v).map(|(c, x)| c * x).sum();
        let on_box = v.iter().any(|&x| x >= ORACLE_BOX - 1.0);
        let replace = match &best {
            None => true,
            Some((bo, _, best_on_box)) => {
                if obj > bo + OPT_EPS {
                    true
                } else if obj < *bo - OPT_EPS {
                    false
                } else {
                    // Tie: prefer a vertex not on the detection box.
                    *best_on_box && !on_box
                }
            }
        };
        if replace {
            best = Some((obj, v, on_box));
        }
    }

    match best {
        None => Ok(LpSolution::non_optimal(LpStatus::Infeasible, 0)),
        Some((_, _, true)) => Ok(LpSolution::non_optimal(LpStatus::Unbounded, 0)),
        Some((obj, v, false)) => Ok(LpSolution {
            status: LpStatus::Optimal,
            variables: v,
            objective: obj,
            pivots: 0,
        }),
    }
}

/// Gaussian elimination with partial pivoting on an n-by-n system. Returns
/// `None` when the system is singular.
fn solve_dense(a: &mut [Vec<f64>], b: &mut [f64]) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let (pivot_row, pivot_val) = (col..n)
            .map(|r| (r, a[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if pivot_val < 1e-12 {
            return None;
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for r in (col + 1)..n {
            let f = a[r][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for c in (row + 1)..n {
            acc -= a[row][c] * x[c];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounded_single_variable() {
        let p = LpProblem::new(vec![1.0], vec![(vec![1.0], 1.0), (vec![1.0], 2.0)]);
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.objective - 1.0).abs() < 1e-9);
    }

    #[test]
    fn two_variable_box() {
        let p = LpProblem::new(
            vec![1.0, 1.0],
            vec![(vec![1.0, 0.0], 1.0), (vec![0.0, 1.0], 1.0)],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.objective - 2.0).abs() < 1e-9);
        assert!((s.variables[0] - 1.0).abs() < 1e-9);
        assert!((s.variables[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn infeasible_contradiction() {
        let p = LpProblem::new(vec![1.0], vec![(vec![-1.0], -1.0), (vec![1.0], 0.0)]);
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_ray() {
        let p = LpProblem::new(vec![1.0], vec![(vec![-1.0], 0.0)]);
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Unbounded);
    }

    #[test]
    fn oracle_agrees_on_trivial_cases() {
        let p = LpProblem::new(
            vec![1.0, 1.0],
            vec![(vec![1.0, 0.0], 1.0), (vec![0.0, 1.0], 1.0)],
        );
        let o = enumerate_vertices_oracle(&p).unwrap();
        assert_eq!(o.status, LpStatus::Optimal);
        assert!((o.objective - 2.0).abs() < 1e-9);

        let p = LpProblem::new(vec![1.0], vec![(vec![-1.0], -1.0), (vec![1.0], 0.0)]);
        assert_eq!(
            enumerate_vertices_oracle(&p).unwrap().status,
            LpStatus::Infeasible
        );
        let p = LpProblem::new(vec![1.0], vec![(vec![-1.0], 0.0)]);
        assert_eq!(
            enumerate_vertices_oracle(&p).unwrap().status,
            LpStatus::Unbounded
        );
    }

    #[test]
    fn optimal_solutions_are_feasible() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let n = 3;
            let m = rng.random_range(2..=6);
            let objective: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
            let constraints: Vec<(Vec<f64>, f64)> = (0..m)
                .map(|_| {
                    (
                        (0..n).map(|_| rng.random_range(-1.0..1.0)).collect(),
                        rng.random_range(-0.2..1.0),
                    )
                })
                .collect();
            let p = LpProblem::new(objective, constraints);
            let s = solve_lp(&p).unwrap();
            if s.status == LpStatus::Optimal {
                for (row, b) in &p.constraints {
                    let lhs: f64 = row.iter().zip(&s.variables).map(|(a, v)| a * v).sum();
                    assert!(lhs <= b + 1e-9);
                }
                assert!(s.variables.iter().all(|&v| v >= -1e-9));
            }
        }
    }

    #[test]
    fn phase2_objective_trace_is_monotone() {
        let p = LpProblem::new(
            vec![3.0, 2.0, 1.0],
            vec![
                (vec![1.0, 1.0, 1.0], 10.0),
                (vec![2.0, 1.0, 0.0], 8.0),
                (vec![0.0, 1.0, 3.0], 9.0),
            ],
        );
        let mut trace = Vec::new();
        let s = solve_lp_traced(&p, Some(&mut trace)).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!(trace.windows(2).all(|w| w[0] <= w[1] + 1e-9));
        assert!((trace.last().copied().unwrap() - s.objective).abs() < 1e-9);
    }
}
