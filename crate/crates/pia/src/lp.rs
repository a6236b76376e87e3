//! Chebyshev-center formulation: turn a convex polygon into half-plane
//! constraints with unit normals, build the maximin LP over (x, y, Z) and
//! solve it exactly with the simplex module. The optimal Z is the radius of
//! the largest inscribed circle.

use crate::error::PiaError;
use crate::geometry::{bounding_box, is_convex, Point, Polygon};
use crate::grid_search::PiaResult;
use crate::simplex::{solve_lp, LpProblem, LpStatus};

/// The half-plane `a*x + b*y <= c` with `(a, b)` the outward unit normal of
/// one polygon edge. For any point p inside the polygon,
/// `c - (a*p.x + b*p.y)` is the perpendicular distance from p to the edge's
/// supporting line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HalfPlane {
    /// Perpendicular distance from an interior point to the edge line;
    /// negative outside the half-plane.
    pub fn signed_distance(&self, p: Point) -> f64 {
        self.c - self.a * p.x - self.b * p.y
    }

    /// The inward unit normal, pointing into the polygon.
    pub fn inward_normal(&self) -> (f64, f64) {
        (-self.a, -self.b)
    }
}

/// One half-plane per edge of a convex polygon.
///
/// Unit-normal form handles vertical edges, which slope-intercept constraint
/// families cannot express; the 1/sqrt(m^2+1) factor of the slope form is
/// exactly this normalization.
pub fn edges_to_halfplanes(poly: &Polygon) -> Result<Vec<HalfPlane>, PiaError> {
    if !is_convex(poly) {
        return Err(PiaError::NotConvex);
    }
    let mut planes = Vec::with_capacity(poly.len());
    for edge in poly.edges() {
        let dx = edge.b.x - edge.a.x;
        let dy = edge.b.y - edge.a.y;
        let len = dx.hypot(dy);
        // Vertices are CCW, so (dy, -dx) points out of the polygon.
        let a = dy / len;
        let b = -dx / len;
        let c = a * edge.a.x + b * edge.a.y;
        planes.push(HalfPlane { a, b, c });
    }
    Ok(planes)
}

/// The maximin LP: maximize Z subject to
/// `a_i*x' + b_i*y' + Z <= c_i - a_i*shift.x - b_i*shift.y` with
/// `x' = x - shift.x`, `y' = y - shift.y` and all three variables
/// nonnegative. Passing the bounding-box minimum as `shift` puts the optimum
/// strictly inside the positive orthant.
pub fn build_chebyshev_lp(halfplanes: &[HalfPlane], shift: Point) -> LpProblem {
    assert!(!halfplanes.is_empty());
    let constraints = halfplanes
        .iter()
        .map(|h| {
            (
                vec![h.a, h.b, 1.0],
                h.c - h.a * shift.x - h.b * shift.y,
            )
        })
        .collect();
    LpProblem::new(vec![0.0, 0.0, 1.0], constraints)
}

/// Exact largest-inscribed-circle center of a convex polygon.
pub fn solve_chebyshev(poly: &Polygon) -> Result<PiaResult, PiaError> {
    let planes = edges_to_halfplanes(poly)?;
    let bbox = bounding_box(poly);
    let shift = Point::new(bbox.min_x, bbox.min_y);
    let problem = build_chebyshev_lp(&planes, shift);
    let solution = solve_lp(&problem)?;
    match solution.status {
        LpStatus::Optimal => Ok(PiaResult {
            center: Point::new(
                solution.variables[0] + shift.x,
                solution.variables[1] + shift.y,
            ),
            radius: solution.objective.max(0.0),
            iterations: solution.pivots,
            nodes_evaluated: 0,
        }),
        // A valid convex polygon always yields a bounded feasible LP; these
        // signal a constraint-construction bug.
        LpStatus::Infeasible => Err(PiaError::Infeasible),
        LpStatus::Unbounded => Err(PiaError::Unbounded),
    }
}
