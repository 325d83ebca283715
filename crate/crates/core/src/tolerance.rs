/// Numerical tolerances used across the crate.
///
/// `boundary` is relative to `max(1, |u|, |v|)` for boundary points; `matrix`
/// applies to determinant and residual checks; `endpoint` is a hyperbolic
/// distance used to decide when a crossing sits on a segment endpoint.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub boundary: f64,
    pub matrix: f64,
    pub endpoint: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        boundary: 1e-12,
        matrix: 1e-10,
        endpoint: 1e-9,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
