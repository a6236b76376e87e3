use thiserror::Error;

/// Errors shared across the solver and generator modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PiaError {
    /// Polygon construction rejected the vertex list.
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    /// The LP path requires a convex polygon.
    #[error("NotConvex: polygon is not convex")]
    NotConvex,

    /// No interior candidate could be found inside the current search region.
    #[error("DegenerateInterior: no interior node found in search region")]
    DegenerateInterior,

    /// Triangle oracle called on (numerically) collinear vertices.
    #[error("Degenerate: triangle vertices are collinear")]
    Degenerate,

    /// Polygon generation exhausted its retry budget.
    #[error("GenerationFailed: no valid polygon after {0} attempts")]
    GenerationFailed(u32),

    /// The LP has no feasible point.
    #[error("Infeasible: linear program has no feasible point")]
    Infeasible,

    /// The LP objective is unbounded above.
    #[error("Unbounded: linear program objective is unbounded")]
    Unbounded,

    /// Simplex could not find an admissible pivot of usable magnitude.
    #[error("NumericalBreakdown: no admissible simplex pivot above tolerance")]
    NumericalBreakdown,
}
