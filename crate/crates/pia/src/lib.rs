//! Solvers for the largest inscribed circle (pole of inaccessibility) of a
//! simple polygon.
//!
//! Three solvers are provided:
//! - [`grid_search::solve_grid`]: sequential lattice refinement over a
//!   shrinking search region.
//! - [`random_search::solve_random`]: Monte Carlo sampling with a
//!   consecutive-miss shrink rule, deterministic per seed.
//! - [`lp::solve_chebyshev`]: exact Chebyshev center of a convex polygon via
//!   a maximin linear program solved with a dense simplex method.
//!
//! Supporting modules supply geometric primitives, ground-truth oracles,
//! pseudo-random polygon generation and a benchmark harness that compares the
//! solvers over a corpus.

pub mod bench;
pub mod error;
pub mod geometry;
pub mod grid_search;
pub mod lp;
pub mod observe;
pub mod oracle;
pub mod polygen;
pub mod random_search;
pub mod simplex;
pub mod svg;

pub use error::PiaError;
pub use geometry::{Point, Polygon, Region, Segment, SphericalPoint};
pub use grid_search::{solve_grid, GridConfig, PiaResult};
pub use lp::solve_chebyshev;
pub use random_search::{solve_random, RandomConfig};
