use crate::geometry::Point;

/// Callbacks into a solver run. Used by the SVG renderer to collect evaluated
/// nodes and by tests to assert the incumbent clearance trace.
#[derive(Default)]
pub struct SolveObserver<'a> {
    /// Called for every node or sample evaluated (interior or not).
    pub on_candidate: Option<&'a mut dyn FnMut(Point)>,
    /// Called each time the incumbent improves, with its clearance.
    pub on_incumbent: Option<&'a mut dyn FnMut(Point, f64)>,
}

impl SolveObserver<'_> {
    pub(crate) fn candidate(&mut self, p: Point) {
        if let Some(f) = self.on_candidate.as_mut() {
            f(p);
        }
    }

    pub(crate) fn incumbent(&mut self, p: Point, clearance: f64) {
        if let Some(f) = self.on_incumbent.as_mut() {
            f(p, clearance);
        }
    }
}
