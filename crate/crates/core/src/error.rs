use thiserror::Error;

/// Numerical tolerance for degeneracy tests on unit-scale data.
pub const EPS_DEG: f64 = 1e-12;

/// Minimum interior margin required before a metric is evaluated.
pub const EPS_BND: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("lines are parallel")]
    ParallelLines,
    #[error("point is not on the unit circle (|z| = {0})")]
    NotOnCircle(f64),
    #[error("points are collinear")]
    CollinearPoints,
    #[error("argument outside the admissible range: {0}")]
    OutOfDomain(String),
    #[error("point lies outside the domain (margin {0:.3e})")]
    OutsideDomain(f64),
    #[error("point is within {0:.3e} of the boundary")]
    NearBoundary(f64),
    #[error("iteration did not converge: {0}")]
    ConvergenceFailure(&'static str),
    #[error("domain is not contained in the closed unit disk")]
    DomainNotNormalized,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("line {line}: {msg}")]
    PolygonParse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, GeomError>;
