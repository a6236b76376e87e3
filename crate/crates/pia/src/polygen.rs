//! Deterministic pseudo-random test polygons: uniform triangles and convex
//! n-gons built on a jittered ellipse.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::PiaError;
use crate::geometry::{is_convex, Point, Polygon, Region};

const MAX_ATTEMPTS: u32 = 100;

/// Independent PRNG stream `index` under a common corpus seed. Every corpus
/// instance gets its own stream so parallel generation and solving stay
/// reproducible.
pub fn substream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn sample_in(bounds: &Region, rng: &mut impl Rng) -> Point {
    let u: f64 = rng.random();
    let v: f64 = rng.random();
    Point::new(
        bounds.min_x + u * bounds.width(),
        bounds.min_y + v * bounds.height(),
    )
}

/// Three uniform points in `bounds`, re-drawn while the triangle's area is
/// below 1e-9 of the bounds area. Narrow triangles stay in the population;
/// only numerically degenerate ones are rejected.
pub fn random_triangle(rng: &mut impl Rng, bounds: &Region) -> Result<Polygon, PiaError> {
    let floor = 1e-9 * bounds.area();
    for _ in 0..MAX_ATTEMPTS {
        let a = sample_in(bounds, rng);
        let b = sample_in(bounds, rng);
        let c = sample_in(bounds, rng);
        let area = 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
        if area.abs() < floor {
            continue;
        }
        if let Ok(poly) = Polygon::new(vec![a, b, c]) {
            return Ok(poly);
        }
    }
    Err(PiaError::GenerationFailed(MAX_ATTEMPTS))
}

/// A convex n-gon: n angle-sorted points on a random ellipse inscribed in
/// `bounds`, each radially jittered by up to 10%; re-jittered until the
/// result is convex.
pub fn random_convex_polygon(
    rng: &mut impl Rng,
    n: usize,
    bounds: &Region,
) -> Result<Polygon, PiaError> {
    assert!(n >= 3);
    let center = bounds.center();
    for _ in 0..MAX_ATTEMPTS {
        // Semi-axes capped so a +10% jitter still fits in the bounds.
        let ax = bounds.width() / 2.0 * rng.random_range(0.4..0.9);
        let ay = bounds.height() / 2.0 * rng.random_range(0.4..0.9);
        let mut angles: Vec<f64> = (0..n)
            .map(|_| rng.random_range(0.0..std::f64::consts::TAU))
            .collect();
        angles.sort_by(f64::total_cmp);
        let min_gap = angles
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(std::f64::consts::TAU - angles[n - 1] + angles[0], f64::min);
        if min_gap < 1e-3 {
            continue;
        }
        // Re-jitter with halving amplitude on convexity violations; the
        // final unjittered pass is convex by construction (distinct points
        // on an ellipse).
        let mut amplitude = 0.1;
        for _ in 0..8 {
            let vertices: Vec<Point> = angles
                .iter()
                .map(|&t| {
                    let s = 1.0 + rng.random_range(-amplitude..amplitude);
                    Point::new(center.x + ax * s * t.cos(), center.y + ay * s * t.sin())
                })
                .collect();
            if let Ok(poly) = Polygon::new(vertices) {
                if is_convex(&poly) {
                    return Ok(poly);
                }
            }
            amplitude *= 0.5;
        }
        let vertices: Vec<Point> = angles
            .iter()
            .map(|&t| Point::new(center.x + ax * t.cos(), center.y + ay * t.sin()))
            .collect();
        if let Ok(poly) = Polygon::new(vertices) {
            if is_convex(&poly) {
                return Ok(poly);
            }
        }
    }
    Err(PiaError::GenerationFailed(MAX_ATTEMPTS))
}

/// `count` triangles under per-instance substreams of `seed`.
pub fn triangle_corpus(seed: u64, count: usize, bounds: &Region) -> Result<Vec<Polygon>, PiaError> {
    (0..count)
        .map(|i| random_triangle(&mut substream(seed, i as u64), bounds))
        .collect()
}

/// `count` convex n-gons under per-instance substreams of `seed`.
pub fn convex_corpus(
    seed: u64,
    count: usize,
    n: usize,
    bounds: &Region,
) -> Result<Vec<Polygon>, PiaError> {
    (0..count)
        .map(|i| random_convex_polygon(&mut substream(seed, i as u64), n, bounds))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_bounds() -> Region {
        Region::new(0.0, 1.0, 0.0, 1.0)
    }

    #[test]
    fn triangles_are_deterministic() {
        let a = random_triangle(&mut substream(42, 0), &unit_bounds()).unwrap();
        let b = random_triangle(&mut substream(42, 0), &unit_bounds()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn triangle_corpus_is_valid() {
        let corpus = triangle_corpus(7, 200, &unit_bounds()).unwrap();
        assert_eq!(corpus.len(), 200);
        for t in &corpus {
            assert_eq!(t.len(), 3);
            assert!(is_convex(t));
            assert!(t.area() > 0.0);
        }
    }

    #[test]
    fn convex_polygons_are_convex_and_deterministic() {
        let bounds = unit_bounds();
        let p = random_convex_polygon(&mut substream(1, 0), 50, &bounds).unwrap();
        assert_eq!(p.len(), 50);
        assert!(is_convex(&p));
        let q = random_convex_polygon(&mut substream(1, 0), 50, &bounds).unwrap();
        assert_eq!(p, q);

        let tri = random_convex_polygon(&mut substream(2, 0), 3, &bounds).unwrap();
        assert_eq!(tri.len(), 3);
        assert!(is_convex(&tri));
    }

    #[test]
    fn generated_vertices_stay_in_bounds() {
        let bounds = unit_bounds();
        for i in 0..20 {
            let p = random_convex_polygon(&mut substream(3, i), 12, &bounds).unwrap();
            for v in p.vertices() {
                assert!((0.0..=1.0).contains(&v.x) && (0.0..=1.0).contains(&v.y));
            }
        }
    }
}
