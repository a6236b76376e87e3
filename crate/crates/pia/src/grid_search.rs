//! Sequential lattice-refinement solver: evaluate an n-by-m grid of nodes
//! over the search region, keep the best interior node, recenter the region
//! on it and shrink by sqrt(2), repeat until the region is smaller than the
//! accuracy target.

use crate::error::PiaError;
use crate::geometry::{bounding_box, clearance, point_in_polygon, Point, Polygon, Region};
use crate::observe::SolveObserver;
use crate::random_search::shrink_region;

/// Parameters for [`solve_grid`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridConfig {
    /// Lattice columns per iteration (>= 2).
    pub n: usize,
    /// Lattice rows per iteration (>= 2).
    pub m: usize,
    /// Terminate once the region's smaller extent drops below this.
    pub min_accuracy: f64,
    /// Safety cap on refinement iterations.
    pub max_iterations: u32,
}

impl GridConfig {
    pub fn new(n: usize, m: usize, min_accuracy: f64) -> Self {
        GridConfig {
            n,
            m,
            min_accuracy,
            max_iterations: 200,
        }
    }

    fn validate(&self) -> Result<(), PiaError> {
        if self.n < 2 || self.m < 2 || !(self.min_accuracy > 0.0) || self.max_iterations < 1 {
            return Err(PiaError::InvalidPolygon(format!(
                "invalid grid config: {self:?}"
            )));
        }
        Ok(())
    }
}

/// Outcome of a solver run: the best point found, its clearance and work
/// counters. Shared by all three solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PiaResult {
    pub center: Point,
    pub radius: f64,
    pub iterations: u32,
    pub nodes_evaluated: u64,
}

/// The n-by-m lattice over `r`, corners included, in row-major order
/// (y varies slowest).
pub fn grid_nodes(r: &Region, n: usize, m: usize) -> Vec<Point> {
    debug_assert!(n >= 2 && m >= 2);
    let mut nodes = Vec::with_capacity(n * m);
    for j in 0..m {
        let y = r.min_y + j as f64 * (r.height() / (m - 1) as f64);
        for i in 0..n {
            let x = r.min_x + i as f64 * (r.width() / (n - 1) as f64);
            nodes.push(Point::new(x, y));
        }
    }
    nodes
}

pub fn solve_grid(poly: &Polygon, cfg: &GridConfig) -> Result<PiaResult, PiaError> {
    solve_grid_observed(poly, cfg, &mut SolveObserver::default())
}

/// [`solve_grid`] with callbacks for evaluated nodes and incumbent updates.
pub fn solve_grid_observed(
    poly: &Polygon,
    cfg: &GridConfig,
    observer: &mut SolveObserver<'_>,
) -> Result<PiaResult, PiaError> {
    cfg.validate()?;
    let mut region = bounding_box(poly);
    let mut best: Option<(Point, f64)> = None;
    let mut iterations = 0u32;
    let mut nodes_evaluated = 0u64;

    loop {
        // One lattice pass, doubling the density on an interior miss.
        let (mut n, mut m) = (cfg.n, cfg.m);
        let mut doublings = 0;
        loop {
            let mut interior_seen = false;
            for node in grid_nodes(&region, n, m) {
                nodes_evaluated += 1;
                observer.candidate(node);
                if !point_in_polygon(node, poly) {
                    continue;
                }
                interior_seen = true;
                let c = clearance(node, poly);
                // Strict improvement only: first node in row-major order
                // wins ties, and the incumbent clearance never decreases.
                if best.map_or(true, |(_, bc)| c > bc) {
                    best = Some((node, c));
                    observer.incumbent(node, c);
                }
            }
            if interior_seen {
                break;
            }
            if doublings == 3 {
                // With an incumbent the region stays centered on an interior
                // point, so later (smaller) iterations will hit it again.
                if best.is_none() {
                    return Err(PiaError::DegenerateInterior);
                }
                break;
            }
            doublings += 1;
            n *= 2;
            m *= 2;
        }

        let (center, _) = best.expect("interior node recorded");
        region = shrink_region(&region, center);
        iterations += 1;
        if region.min_dimension() <= cfg.min_accuracy || iterations >= cfg.max_iterations {
            break;
        }
    }

    let (center, radius) = best.expect("at least one iteration ran");
    Ok(PiaResult {
        center,
        radius,
        iterations,
        nodes_evaluated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::triangle_incenter;

    fn unit_square() -> Polygon {
        Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn lattice_includes_corners() {
        let r = Region::new(0.0, 1.0, 0.0, 1.0);
        let nodes = grid_nodes(&r, 2, 2);
        assert_eq!(
            nodes,
            vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(0.0, 1.0),
                Point::new(1.0, 1.0),
            ]
        );
        let nodes = grid_nodes(&r, 3, 3);
        assert_eq!(nodes.len(), 9);
        assert_eq!(nodes[4], Point::new(0.5, 0.5));
    }

    #[test]
    fn lattice_rectangular() {
        let r = Region::new(0.0, 2.0, 0.0, 1.0);
        let nodes = grid_nodes(&r, 3, 2);
        assert_eq!(nodes.len(), 6);
        for p in &nodes {
            assert!([0.0, 1.0, 2.0].contains(&p.x));
            assert!([0.0, 1.0].contains(&p.y));
        }
    }

    #[test]
    fn square_converges_to_center() {
        let cfg = GridConfig::new(12, 12, 1e-6);
        let r = solve_grid(&unit_square(), &cfg).unwrap();
        assert!((r.center.x - 0.5).abs() < 1e-6);
        assert!((r.center.y - 0.5).abs() < 1e-6);
        assert!((r.radius - 0.5).abs() < 1e-6);
    }

    #[test]
    fn triangle_345_matches_incenter() {
        let tri = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(0.0, 3.0),
        ])
        .unwrap();
        let exact = triangle_incenter(&tri).unwrap();
        let cfg = GridConfig::new(20, 20, 1e-9);
        let r = solve_grid(&tri, &cfg).unwrap();
        assert!((r.center.x - exact.center.x).abs() < 1e-6);
        assert!((r.center.y - exact.center.y).abs() < 1e-6);
        assert!((r.radius - exact.radius).abs() < 1e-6);
        // Feasible-point bound: never above the optimum.
        assert!(r.radius <= exact.radius + 1e-9);
    }

    #[test]
    fn deterministic() {
        let tri = Polygon::new(vec![
            Point::new(0.1, 0.2),
            Point::new(3.7, 0.4),
            Point::new(1.2, 2.9),
        ])
        .unwrap();
        let cfg = GridConfig::new(12, 12, 1e-7);
        let a = solve_grid(&tri, &cfg).unwrap();
        let b = solve_grid(&tri, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn incumbent_trace_is_monotone() {
        let tri = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(0.0, 3.0),
        ])
        .unwrap();
        let mut trace = Vec::new();
        let mut hook = |_: Point, c: f64| trace.push(c);
        let mut obs = SolveObserver {
            on_candidate: None,
            on_incumbent: Some(&mut hook),
        };
        solve_grid_observed(&tri, &GridConfig::new(12, 12, 1e-6), &mut obs).unwrap();
        assert!(trace.windows(2).all(|w| w[0] <= w[1]));
    }
}
