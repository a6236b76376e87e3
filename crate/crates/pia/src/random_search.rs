//! Monte Carlo solver: sample uniform points in the search region, keep the
//! maximin incumbent, and shrink the region around it once `k` consecutive
//! interior samples fail to improve it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::PiaError;
use crate::geometry::{bounding_box, clearance, point_in_polygon, Point, Polygon, Region};
use crate::grid_search::PiaResult;
use crate::observe::SolveObserver;

pub const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Parameters for [`solve_random`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomConfig {
    /// Consecutive non-improving interior samples before the region shrinks.
    pub k: u32,
    /// Terminate once the region's smaller extent drops below this.
    pub min_accuracy: f64,
    /// Cap on samples per region; guards against sliver polygons where
    /// almost every sample lands outside.
    pub sample_cap: u64,
    /// PRNG seed; the run is a pure function of (polygon, config).
    pub seed: u64,
}

impl RandomConfig {
    pub fn new(k: u32, min_accuracy: f64, seed: u64) -> Self {
        RandomConfig {
            k,
            min_accuracy,
            sample_cap: 10_000,
            seed,
        }
    }

    fn validate(&self) -> Result<(), PiaError> {
        if self.k < 1 || !(self.min_accuracy > 0.0) || self.sample_cap < u64::from(self.k) {
            return Err(PiaError::InvalidPolygon(format!(
                "invalid random config: {self:?}"
            )));
        }
        Ok(())
    }
}

/// Uniform point in `r`: draws unit uniforms u, v in [0, 1) and maps them
/// affinely onto the region. Sampling this way makes runs with a fixed seed
/// equivariant under translation and scaling of the region.
pub fn sample_point<R: Rng>(r: &Region, rng: &mut R) -> Point {
    let u: f64 = rng.random();
    let v: f64 = rng.random();
    Point::new(r.min_x + u * r.width(), r.min_y + v * r.height())
}

/// New region centered on `incumbent` with half-extents `extent / (2 sqrt 2)`
/// per axis, both taken from the pre-update bounds. The minimum dimension
/// contracts by exactly 1/sqrt(2). The result may extend outside the polygon;
/// it is never clipped.
pub fn shrink_region(r: &Region, incumbent: Point) -> Region {
    let hx = r.width() / (2.0 * SQRT_2);
    let hy = r.height() / (2.0 * SQRT_2);
    Region::new(
        incumbent.x - hx,
        incumbent.x + hx,
        incumbent.y - hy,
        incumbent.y + hy,
    )
}

pub fn solve_random(poly: &Polygon, cfg: &RandomConfig) -> Result<PiaResult, PiaError> {
    solve_random_observed(poly, cfg, &mut SolveObserver::default())
}

/// [`solve_random`] with callbacks for evaluated samples and incumbent
/// updates.
pub fn solve_random_observed(
    poly: &Polygon,
    cfg: &RandomConfig,
    observer: &mut SolveObserver<'_>,
) -> Result<PiaResult, PiaError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut region = bounding_box(poly);
    let mut best: Option<(Point, f64)> = None;
    let mut iterations = 0u32;
    let mut samples = 0u64;

    // Accuracy is checked before sampling; at least one region is always
    // sampled so an incumbent exists.
    while iterations == 0 || region.min_dimension() > cfg.min_accuracy {
        let mut misses = 0u32;
        let mut samples_here = 0u64;
        let mut interior_seen = false;
        while misses < cfg.k {
            if samples_here >= cfg.sample_cap {
                if interior_seen {
                    break;
                }
                return Err(PiaError::DegenerateInterior);
            }
            let p = sample_point(&region, &mut rng);
            samples += 1;
            samples_here += 1;
            observer.candidate(p);
            // Exterior samples neither update the incumbent nor count as
            // misses.
            if !point_in_polygon(p, poly) {
                continue;
            }
            interior_seen = true;
            let c = clearance(p, poly);
            if best.map_or(true, |(_, bc)| c > bc) {
                best = Some((p, c));
                observer.incumbent(p, c);
                misses = 0;
            } else {
                misses += 1;
            }
        }
        let (center, _) = best.expect("interior sample recorded");
        region = shrink_region(&region, center);
        iterations += 1;
    }

    let (center, radius) = best.expect("at least one region sampled");
    Ok(PiaResult {
        center,
        radius,
        iterations,
        nodes_evaluated: samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

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
    fn square_converges_near_center() {
        let cfg = RandomConfig::new(50, 1e-6, 42);
        let r = solve_random(&unit_square(), &cfg).unwrap();
        assert!((r.center.x - 0.5).abs() < 1e-4);
        assert!((r.center.y - 0.5).abs() < 1e-4);
        assert!((r.radius - 0.5).abs() < 1e-4);
    }

    #[test]
    fn deterministic_per_seed() {
        let cfg = RandomConfig::new(50, 1e-6, 42);
        let a = solve_random(&unit_square(), &cfg).unwrap();
        let b = solve_random(&unit_square(), &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn shrink_examples() {
        let r = shrink_region(&Region::new(0.0, 1.0, 0.0, 1.0), Point::new(0.5, 0.5));
        let h = 1.0 / (2.0 * SQRT_2);
        assert!((r.min_x - (0.5 - h)).abs() < 1e-15);
        assert!((r.max_x - (0.5 + h)).abs() < 1e-15);
        assert!((r.width() - 1.0 / SQRT_2).abs() < 1e-15);

        let r = shrink_region(&Region::new(0.0, 2.0, 0.0, 2.0), Point::new(1.0, 1.0));
        assert!((r.width() - SQRT_2).abs() < 1e-15);
        assert!((r.center().x - 1.0).abs() < 1e-15);

        // Incumbent at a corner: the region may leave the polygon.
        let r = shrink_region(&Region::new(0.0, 1.0, 0.0, 1.0), Point::new(0.0, 0.0));
        assert!(r.min_x < 0.0 && r.min_y < 0.0);
        assert!((r.max_x - h).abs() < 1e-15);
    }

    #[test]
    fn sampling_is_affine_in_region() {
        let unit = Region::new(0.0, 1.0, 0.0, 1.0);
        let scaled = Region::new(0.0, 10.0, 0.0, 10.0);
        let mut r1 = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let mut r2 = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let a = sample_point(&unit, &mut r1);
            let b = sample_point(&scaled, &mut r2);
            assert_eq!(a.x * 10.0, b.x);
            assert_eq!(a.y * 10.0, b.y);
        }
    }

    #[test]
    fn sample_point_maps_endpoints() {
        // A rigged generator pinning the unit uniforms.
        struct Fixed(f64);
        impl rand::RngCore for Fixed {
            fn next_u32(&mut self) -> u32 {
                self.next_u64() as u32
            }
            fn next_u64(&mut self) -> u64 {
                // rand's f64 Standard draw uses the top 53 bits.
                (self.0 * (1u64 << 53) as f64) as u64 * (1 << 11)
            }
            fn fill_bytes(&mut self, dest: &mut [u8]) {
                for b in dest {
                    *b = 0;
                }
            }
        }
        let r = Region::new(0.0, 1.0, 0.0, 1.0);
        let p = sample_point(&r, &mut Fixed(0.0));
        assert_eq!(p, Point::new(0.0, 0.0));
        let r = Region::new(2.0, 4.0, 0.0, 1.0);
        let p = sample_point(&r, &mut Fixed(0.5));
        assert_eq!(p, Point::new(3.0, 0.5));
    }

    #[test]
    fn region_contracts_by_sqrt2_each_iteration() {
        let poly = unit_square();
        let cfg = RandomConfig::new(10, 1e-4, 3);
        let res = solve_random(&poly, &cfg).unwrap();
        let expected = 1.0 / SQRT_2.powi(res.iterations as i32);
        // Reconstruct the final min-dimension from the iteration count.
        assert!(expected <= 1e-4 * (1.0 + 1e-9));
        assert!(expected * SQRT_2 > 1e-4 * (1.0 - 1e-9));
    }

    #[test]
    fn translation_equivariance_with_fixed_seed() {
        let base = unit_square();
        let shifted = Polygon::new(
            base.vertices()
                .iter()
                .map(|p| Point::new(p.x + 7.0, p.y - 3.0))
                .collect(),
        )
        .unwrap();
        let cfg = RandomConfig::new(30, 1e-6, 123);
        let a = solve_random(&base, &cfg).unwrap();
        let b = solve_random(&shifted, &cfg).unwrap();
        assert!((a.center.x + 7.0 - b.center.x).abs() < 1e-9);
        assert!((a.center.y - 3.0 - b.center.y).abs() < 1e-9);
        assert!((a.radius - b.radius).abs() < 1e-9);
        assert_eq!(a.nodes_evaluated, b.nodes_evaluated);
    }

    #[test]
    fn incumbent_trace_is_monotone() {
        let mut trace = Vec::new();
        let mut hook = |_: Point, c: f64| trace.push(c);
        let mut obs = SolveObserver {
            on_candidate: None,
            on_incumbent: Some(&mut hook),
        };
        let cfg = RandomConfig::new(25, 1e-6, 77);
        solve_random_observed(&unit_square(), &cfg, &mut obs).unwrap();
        assert!(!trace.is_empty());
        assert!(trace.windows(2).all(|w| w[0] <= w[1]));
    }
}
