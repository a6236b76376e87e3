//! Property tests for the geometric and solver invariants.

use proptest::prelude::*;

use pia::geometry::{
    clearance, point_in_polygon, point_segment_distance, Point, Polygon, Region, Segment,
};
use pia::lp::edges_to_halfplanes;
use pia::oracle::triangle_incenter;
use pia::polygen::{random_triangle, substream};
use pia::random_search::shrink_region;

fn finite_coord() -> impl Strategy<Value = f64> {
    -100.0..100.0f64
}

fn arb_point() -> impl Strategy<Value = Point> {
    (finite_coord(), finite_coord()).prop_map(|(x, y)| Point::new(x, y))
}

fn arb_segment() -> impl Strategy<Value = Segment> {
    (arb_point(), arb_point())
        .prop_filter("distinct endpoints", |(a, b)| a != b)
        .prop_map(|(a, b)| Segment::new(a, b))
}

proptest! {
    #[test]
    fn segment_distance_symmetric_in_endpoints(p in arb_point(), s in arb_segment()) {
        let fwd = point_segment_distance(p, &s);
        let rev = point_segment_distance(p, &Segment::new(s.b, s.a));
        prop_assert!((fwd - rev).abs() <= 1e-9 * fwd.max(1.0));
    }

    #[test]
    fn segment_distance_rigid_motion_equivariant(
        p in arb_point(),
        s in arb_segment(),
        angle in 0.0..std::f64::consts::TAU,
        dx in finite_coord(),
        dy in finite_coord(),
    ) {
        let rot = |q: Point| Point::new(
            q.x * angle.cos() - q.y * angle.sin() + dx,
            q.x * angle.sin() + q.y * angle.cos() + dy,
        );
        let before = point_segment_distance(p, &s);
        let after = point_segment_distance(rot(p), &Segment::new(rot(s.a), rot(s.b)));
        prop_assert!((before - after).abs() <= 1e-9 * before.max(1.0));
    }

    #[test]
    fn zero_distance_iff_on_segment(s in arb_segment(), t in 0.0..=1.0f64, offset in 1e-3..1.0f64) {
        let on = Point::new(s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y));
        prop_assert!(point_segment_distance(on, &s) <= 1e-12 * 100.0);
        // A point pushed off along the normal is strictly off the segment.
        let len = s.a.distance(&s.b);
        let nx = -(s.b.y - s.a.y) / len;
        let ny = (s.b.x - s.a.x) / len;
        let off = Point::new(on.x + offset * nx, on.y + offset * ny);
        prop_assert!((point_segment_distance(off, &s) - offset).abs() <= 1e-9);
    }

    #[test]
    fn clearance_bounded_by_each_edge_distance(seed in 0u64..500, px in 0.0..1.0f64, py in 0.0..1.0f64) {
        let bounds = Region::new(0.0, 1.0, 0.0, 1.0);
        let tri = random_triangle(&mut substream(seed, 0), &bounds).unwrap();
        let p = Point::new(px, py);
        let c = clearance(p, &tri);
        for edge in tri.edges() {
            prop_assert!(c <= point_segment_distance(p, &edge) + 1e-12);
        }
    }

    #[test]
    fn containment_invariant_under_vertex_reversal(seed in 0u64..200, px in -0.5..1.5f64, py in -0.5..1.5f64) {
        let bounds = Region::new(0.0, 1.0, 0.0, 1.0);
        let tri = random_triangle(&mut substream(seed, 1), &bounds).unwrap();
        let reversed = Polygon::new(tri.vertices().iter().rev().copied().collect()).unwrap();
        let p = Point::new(px, py);
        prop_assert_eq!(point_in_polygon(p, &tri), point_in_polygon(p, &reversed));
    }

    #[test]
    fn convex_clearance_equals_min_halfplane_distance(seed in 0u64..200) {
        let bounds = Region::new(0.0, 1.0, 0.0, 1.0);
        let tri = random_triangle(&mut substream(seed, 2), &bounds).unwrap();
        let planes = edges_to_halfplanes(&tri).unwrap();
        // Interior probe: the incenter.
        let inc = triangle_incenter(&tri).unwrap();
        let hp_min = planes
            .iter()
            .map(|h| h.signed_distance(inc.center))
            .fold(f64::INFINITY, f64::min);
        prop_assert!((clearance(inc.center, &tri) - hp_min).abs() <= 1e-9);
    }

    #[test]
    fn shrink_contracts_min_dimension_by_sqrt2(
        min_x in -10.0..10.0f64,
        w in 0.1..10.0f64,
        min_y in -10.0..10.0f64,
        h in 0.1..10.0f64,
        cx in -10.0..10.0f64,
        cy in -10.0..10.0f64,
    ) {
        let r = Region::new(min_x, min_x + w, min_y, min_y + h);
        let shrunk = shrink_region(&r, Point::new(cx, cy));
        let expected = r.min_dimension() / std::f64::consts::SQRT_2;
        prop_assert!((shrunk.min_dimension() - expected).abs() <= 1e-9 * expected);
        prop_assert!((shrunk.center().x - cx).abs() <= 1e-9);
        prop_assert!((shrunk.center().y - cy).abs() <= 1e-9);
    }
}
