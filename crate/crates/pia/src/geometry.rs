//! Planar primitives: points, segments, polygons, regions, distances,
//! containment and convexity tests, plus the spherical great-circle distance.

use crate::error::PiaError;

/// Absolute tolerance below which a cross product is treated as zero.
const COLLINEAR_EPS: f64 = 1e-12;

/// Points closer than this to an edge are treated as lying on the boundary.
const ON_BOUNDARY_EPS: f64 = 1e-12;

/// A point in the Euclidean plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite());
        Point { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// A point on the unit sphere, longitude `lambda` and latitude `phi` in
/// radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalPoint {
    pub lambda: f64,
    pub phi: f64,
}

impl SphericalPoint {
    /// Requires `phi` in [-pi/2, pi/2] and `lambda` in [-pi, pi).
    pub fn new(lambda: f64, phi: f64) -> Self {
        use std::f64::consts::{FRAC_PI_2, PI};
        debug_assert!((-FRAC_PI_2..=FRAC_PI_2).contains(&phi));
        debug_assert!((-PI..PI).contains(&lambda));
        SphericalPoint { lambda, phi }
    }
}

/// A closed line segment between two distinct points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        debug_assert!(a != b, "degenerate segment");
        Segment { a, b }
    }
}

/// An axis-aligned search rectangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub min_x: f64,
    pub max_x: f64,
    pub min_y: f64,
    pub max_y: f64,
}

impl Region {
    pub fn new(min_x: f64, max_x: f64, min_y: f64, max_y: f64) -> Self {
        debug_assert!(min_x < max_x && min_y < max_y, "empty region");
        Region {
            min_x,
            max_x,
            min_y,
            max_y,
        }
    }

    pub fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    /// Smaller of the two extents; the accuracy measure both search solvers
    /// terminate on.
    pub fn min_dimension(&self) -> f64 {
        self.width().min(self.height())
    }

    pub fn center(&self) -> Point {
        Point::new(
            0.5 * (self.min_x + self.max_x),
            0.5 * (self.min_y + self.max_y),
        )
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }
}

/// A simple polygon with at least three vertices, stored counter-clockwise.
///
/// Construction normalizes orientation and rejects self-intersecting input,
/// consecutive duplicate vertices, non-finite coordinates and zero area.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self, PiaError> {
        if vertices.len() < 3 {
            return Err(PiaError::InvalidPolygon(format!(
                "need at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if vertices
            .iter()
            .any(|p| !p.x.is_finite() || !p.y.is_finite())
        {
            return Err(PiaError::InvalidPolygon(
                "non-finite vertex coordinate".into(),
            ));
        }
        let n = vertices.len();
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(PiaError::InvalidPolygon(format!(
                    "consecutive duplicate vertex at index {i}"
                )));
            }
        }
        let area = signed_area(&vertices);
        if area == 0.0 {
            return Err(PiaError::InvalidPolygon("zero area".into()));
        }
        let mut vertices = vertices;
        if area < 0.0 {
            vertices.reverse();
        }
        if let Some((i, j)) = find_self_intersection(&vertices) {
            return Err(PiaError::InvalidPolygon(format!(
                "edges {i} and {j} intersect"
            )));
        }
        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Edges in vertex order, each from vertex i to vertex i+1 (wrapping).
    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| Segment::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }
}

fn signed_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    let mut acc = 0.0;
    for i in 0..n {
        let p = vertices[i];
        let q = vertices[(i + 1) % n];
        acc += p.x * q.y - q.x * p.y;
    }
    0.5 * acc
}

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

fn on_segment_collinear(p: Point, a: Point, b: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

fn segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool {
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment_collinear(p1, q1, q2))
        || (d2 == 0.0 && on_segment_collinear(p2, q1, q2))
        || (d3 == 0.0 && on_segment_collinear(q1, p1, p2))
        || (d4 == 0.0 && on_segment_collinear(q2, p1, p2))
}

/// O(N^2) pairwise edge test. Adjacent edges may only meet at their shared
/// vertex; doubling back along the previous edge is rejected.
fn find_self_intersection(vertices: &[Point]) -> Option<(usize, usize)> {
    let n = vertices.len();
    for i in 0..n {
        let (a1, a2) = (vertices[i], vertices[(i + 1) % n]);
        for j in (i + 1)..n {
            let (b1, b2) = (vertices[j], vertices[(j + 1) % n]);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // Shared endpoint is fine; doubling back along the previous
                // edge is not.
                let (shared, pa, pb) = if j == i + 1 {
                    (a2, a1, b2)
                } else {
                    (a1, a2, b1)
                };
                // Exact test: slivers with tiny-but-nonzero area are valid
                // simple polygons and must construct.
                let collinear = cross(shared, pa, pb) == 0.0;
                let same_side = (pa.x - shared.x) * (pb.x - shared.x)
                    + (pa.y - shared.y) * (pb.y - shared.y)
                    > 0.0;
                if collinear && same_side {
                    return Some((i, j));
                }
            } else if segments_intersect(a1, a2, b1, b2) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Euclidean distance from `p` to the nearest point of the closed segment.
/// The perpendicular foot is clamped to the endpoints.
pub fn point_segment_distance(p: Point, s: &Segment) -> f64 {
    let dx = s.b.x - s.a.x;
    let dy = s.b.y - s.a.y;
    let len2 = dx * dx + dy * dy;
    let t = if len2 > 0.0 {
        (((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let nearest = Point::new(s.a.x + t * dx, s.a.y + t * dy);
    p.distance(&nearest)
}

/// Closed containment test: boundary points count as inside.
pub fn point_in_polygon(p: Point, poly: &Polygon) -> bool {
    for edge in poly.edges() {
        if point_segment_distance(p, &edge) <= ON_BOUNDARY_EPS {
            return true;
        }
    }
    // Standard even-odd ray cast.
    let verts = poly.vertices();
    let n = verts.len();
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (vi, vj) = (verts[i], verts[j]);
        if (vi.y > p.y) != (vj.y > p.y)
            && p.x < (vj.x - vi.x) * (p.y - vi.y) / (vj.y - vi.y) + vi.x
        {
            inside = !inside;
        }
        j = i;
    }
    inside
}

/// Minimum distance from `p` to the polygon boundary over all edges.
pub fn clearance(p: Point, poly: &Polygon) -> f64 {
    poly.edges()
        .map(|e| point_segment_distance(p, &e))
        .fold(f64::INFINITY, f64::min)
}

/// Tight axis-aligned bounds over all vertices.
pub fn bounding_box(poly: &Polygon) -> Region {
    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for v in poly.vertices() {
        min_x = min_x.min(v.x);
        max_x = max_x.max(v.x);
        min_y = min_y.min(v.y);
        max_y = max_y.max(v.y);
    }
    Region::new(min_x, max_x, min_y, max_y)
}

/// True iff all cross products of consecutive edge vectors share a sign.
/// Collinear triples (|cross| < 1e-12) are tolerated.
pub fn is_convex(poly: &Polygon) -> bool {
    let verts = poly.vertices();
    let n = verts.len();
    for i in 0..n {
        let c = cross(verts[i], verts[(i + 1) % n], verts[(i + 2) % n]);
        // Vertices are CCW after construction, so convexity means no
        // strictly negative turn.
        if c < -COLLINEAR_EPS {
            return false;
        }
    }
    true
}

/// Central angle in radians between two points on the unit sphere, from the
/// spherical law of cosines. The arccos argument is clamped to [-1, 1].
pub fn great_circle_distance(a: &SphericalPoint, b: &SphericalPoint) -> f64 {
    let arg = a.phi.sin() * b.phi.sin() + a.phi.cos() * b.phi.cos() * (a.lambda - b.lambda).cos();
    arg.clamp(-1.0, 1.0).acos()
}
