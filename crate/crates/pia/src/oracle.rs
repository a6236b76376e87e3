//! Ground truth for the test and benchmark suites: the analytic triangle
//! incenter and a dense-lattice brute-force search for arbitrary polygons.

use crate::error::PiaError;
use crate::geometry::{bounding_box, clearance, point_in_polygon, Point, Polygon};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// An exact (or error-bounded) inscribed circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactCircle {
    pub center: Point,
    pub radius: f64,
}

/// Analytic incenter: `(a*A + b*B + c*C) / (a+b+c)` with side lengths
/// opposite their vertices; radius is `2 * area / perimeter`.
pub fn triangle_incenter(t: &Polygon) -> Result<ExactCircle, PiaError> {
    if t.len() != 3 {
        return Err(PiaError::InvalidPolygon(format!(
            "incenter needs a triangle, got {} vertices",
            t.len()
        )));
    }
    let [va, vb, vc] = [t.vertices()[0], t.vertices()[1], t.vertices()[2]];
    let area = t.area().abs();
    if area <= 1e-12 {
        return Err(PiaError::Degenerate);
    }
    let a = vb.distance(&vc);
    let b = vc.distance(&va);
    let c = va.distance(&vb);
    let perimeter = a + b + c;
    let center = Point::new(
        (a * va.x + b * vb.x + c * vc.x) / perimeter,
        (a * va.y + b * vb.y + c * vc.y) / perimeter,
    );
    Ok(ExactCircle {
        center,
        radius: 2.0 * area / perimeter,
    })
}

/// Best clearance over a `resolution`-by-`resolution` lattice covering the
/// bounding box, interior points only. Accuracy is bounded by
/// `bbox_extent / resolution`. Rows are scanned in parallel when the
/// `parallel` feature is on; the row-major first-wins tie-break is identical
/// either way.
pub fn brute_force_pia(poly: &Polygon, resolution: usize) -> Result<ExactCircle, PiaError> {
    assert!(resolution >= 100, "resolution must be at least 100");
    let bbox = bounding_box(poly);
    let step_x = bbox.width() / (resolution - 1) as f64;
    let step_y = bbox.height() / (resolution - 1) as f64;

    // Best node in one lattice row: (clearance, column index).
    let row_best = |j: usize| -> Option<(f64, usize)> {
        let y = bbox.min_y + j as f64 * step_y;
        let mut best: Option<(f64, usize)> = None;
        for i in 0..resolution {
            let p = Point::new(bbox.min_x + i as f64 * step_x, y);
            if !point_in_polygon(p, poly) {
                continue;
            }
            let c = clearance(p, poly);
            if best.map_or(true, |(bc, _)| c > bc) {
                best = Some((c, i));
            }
        }
        best
    };

    // Deterministic reduction: higher clearance wins, then the earlier
    // row-major position.
    let merge = |a: Option<(f64, usize, usize)>, b: Option<(f64, usize, usize)>| match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if y.0 > x.0 || (y.0 == x.0 && (y.1, y.2) < (x.1, x.2)) {
                Some(y)
            } else {
                Some(x)
            }
        }
    };

    #[cfg(feature = "parallel")]
    let best = (0..resolution)
        .into_par_iter()
        .map(|j| row_best(j).map(|(c, i)| (c, j, i)))
        .reduce(|| None, merge);

    #[cfg(not(feature = "parallel"))]
    let best = (0..resolution)
        .map(|j| row_best(j).map(|(c, i)| (c, j, i)))
        .fold(None, merge);

    let (radius, j, i) = best.ok_or(PiaError::DegenerateInterior)?;
    Ok(ExactCircle {
        center: Point::new(bbox.min_x + i as f64 * step_x, bbox.min_y + j as f64 * step_y),
        radius,
    })
}
