//! Hyperbolic metric of the unit ball and the upper half-plane, geodesic
//! endpoints, hyperbolic disks as Euclidean disks, and the tangent-line
//! constructions around a geodesic segment of the disk.

use num_complex::Complex64;

use crate::error::{GeomError, Result, EPS_BND, EPS_DEG};
use crate::geom::{circle_through, dist_origin_line, Circle2};
use crate::report::MetricReport;
use crate::vecn;

/// Tolerance used by [`lem_fuji_check`] for its two residuals.
pub const LEM_FUJI_TOL: f64 = 1e-9;

/// `1 − |x|²`, computed as `(1 − |x|)(1 + |x|)`.
pub(crate) fn one_minus_sq(x: &[f64]) -> f64 {
    let r = vecn::norm(x);
    (1.0 - r) * (1.0 + r)
}

pub(crate) fn one_minus_sq_c(z: Complex64) -> f64 {
    let r = z.norm();
    (1.0 - r) * (1.0 + r)
}

/// Requires `|x| < 1` with margin [`EPS_BND`].
pub fn check_in_ball(x: &[f64]) -> Result<()> {
    if x.iter().any(|c| !c.is_finite()) {
        return Err(GeomError::OutOfDomain("non-finite coordinate".into()));
    }
    let r = vecn::norm(x);
    if r >= 1.0 {
        return Err(GeomError::OutOfDomain(format!("point outside the unit ball (|x| = {r})")));
    }
    if 1.0 - r < EPS_BND {
        return Err(GeomError::NearBoundary(1.0 - r));
    }
    Ok(())
}

pub(crate) fn check_in_disk(z: Complex64) -> Result<()> {
    check_in_ball(&[z.re, z.im])
}

/// `arch` with its argument clamped to `[1, ∞)`; callers pass values that are
/// mathematically at least one.
pub(crate) fn arch(x: f64) -> f64 {
    x.max(1.0).acosh()
}

/// Hyperbolic distance in 𝔹ⁿ: `2·arsh(|a−b| / √((1−|a|²)(1−|b|²)))`.
pub fn rho_ball(a: &[f64], b: &[f64]) -> Result<f64> {
    vecn::check_same_dim(a, b)?;
    check_in_ball(a)?;
    check_in_ball(b)?;
    let s = vecn::dist(a, b) / (one_minus_sq(a) * one_minus_sq(b)).sqrt();
    Ok(2.0 * s.asinh())
}

pub fn rho_disk(a: Complex64, b: Complex64) -> Result<f64> {
    rho_ball(&[a.re, a.im], &[b.re, b.im])
}

/// Hyperbolic distance in the upper half-plane.
pub fn rho_half_plane(a: Complex64, b: Complex64) -> Result<f64> {
    if !(a.im > 0.0 && b.im > 0.0) {
        return Err(GeomError::OutOfDomain("half-plane points need Im > 0".into()));
    }
    // arch(1 + x) = log1p(x + √(x(x + 2)))
    let x = (a - b).norm_sqr() / (2.0 * a.im * b.im);
    Ok((x + (x * (x + 2.0)).sqrt()).ln_1p())
}

/// What carries a hyperbolic geodesic of the disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeodesicCarrier {
    Diameter,
    Circle(Circle2),
}

/// Ideal endpoints of the geodesic through two points of the disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicArcB2 {
    pub a_star: Complex64,
    pub b_star: Complex64,
    pub carrier: GeodesicCarrier,
}

/// Endpoints on the unit circle of the geodesic through `a` and `b`, with
/// `a_star` on the side of `a`.
pub fn geodesic_endpoints_ball(a: Complex64, b: Complex64) -> Result<GeodesicArcB2> {
    check_in_disk(a)?;
    check_in_disk(b)?;
    if (a - b).norm() < EPS_DEG {
        return Err(GeomError::DegenerateInput("geodesic through coincident points"));
    }
    let m = dist_origin_line(&[a.re, a.im], &[b.re, b.im])?;
    if m < EPS_DEG {
        let e = (b - a) / (b - a).norm();
        return Ok(GeodesicArcB2 { a_star: -e, b_star: e, carrier: GeodesicCarrier::Diameter });
    }
    // Inversion of the point farther from the origin is the better
    // conditioned third point of the orthogonal circle.
    let p = if a.norm() >= b.norm() { a } else { b };
    let p_inv = p / p.norm_sqr();
    let circle = circle_through(a, b, p_inv)?;
    let c = circle.center;
    let r = (c.norm_sqr() - 1.0).max(0.0).sqrt();
    let w1 = Complex64::new(1.0, r) / c.conj();
    let w2 = Complex64::new(1.0, -r) / c.conj();
    let (a_star, b_star) = if (a - w1).norm() - (b - w1).norm() <= 0.0 { (w1, w2) } else { (w2, w1) };
    Ok(GeodesicArcB2 { a_star, b_star, carrier: GeodesicCarrier::Circle(circle) })
}

/// Euclidean disk equal to the hyperbolic disk `B_ρ(x, M)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanDiskImage {
    pub center: Complex64,
    pub radius: f64,
    pub t: f64,
}

pub fn hyp_disk_to_euclidean(x: Complex64, radius: f64) -> Result<EuclideanDiskImage> {
    check_in_disk(x)?;
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(GeomError::OutOfDomain(format!("hyperbolic radius must be positive, got {radius}")));
    }
    let t = (radius / 2.0).tanh();
    let x2 = x.norm_sqr();
    let den = 1.0 - x2 * t * t;
    Ok(EuclideanDiskImage { center: x * ((1.0 - t * t) / den), radius: one_minus_sq_c(x) * t / den, t })
}

/// `A[a,b] = √(|a−b|² + (1−|a|²)(1−|b|²))`.
pub fn a_bracket(a: &[f64], b: &[f64]) -> f64 {
    (vecn::dist_sq(a, b) + (1.0 - vecn::norm_sq(a)) * (1.0 - vecn::norm_sq(b))).sqrt()
}

/// Absolute difference of the two sides of
/// `|a(1−|b|²) + b(1−|a|²)|² = (1−|a|²|b|²)² − (1−|a|²)(1−|b|²)A[a,b]²`.
pub fn siden_residual(a: &[f64], b: &[f64]) -> f64 {
    let (na, nb) = (vecn::norm_sq(a), vecn::norm_sq(b));
    let w: Vec<f64> = a.iter().zip(b).map(|(x, y)| x * (1.0 - nb) + y * (1.0 - na)).collect();
    let lhs = vecn::norm_sq(&w);
    let ab = a_bracket(a, b);
    let rhs = (1.0 - na * nb).powi(2) - (1.0 - na) * (1.0 - nb) * ab * ab;
    (lhs - rhs).abs()
}

fn weighted_sum(a: Complex64, b: Complex64) -> Complex64 {
    a * one_minus_sq_c(b) + b * one_minus_sq_c(a)
}

/// Hyperbolic midpoint of `a` and `b` in the disk.
pub fn hyp_midpoint(a: Complex64, b: Complex64) -> Result<Complex64> {
    check_in_disk(a)?;
    check_in_disk(b)?;
    let num = weighted_sum(a, b);
    if num.norm() == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let p = one_minus_sq_c(a) * one_minus_sq_c(b);
    let ab = a_bracket(&[a.re, a.im], &[b.re, b.im]);
    Ok(num / (1.0 - a.norm_sqr() * b.norm_sqr() + p.sqrt() * ab))
}

/// Intersection of the tangent lines to the geodesic circle through `a`
/// and `b` at those two points.
pub fn tangent_meet_cen(a: Complex64, b: Complex64) -> Result<Complex64> {
    check_in_disk(a)?;
    check_in_disk(b)?;
    if (a - b).norm() < EPS_DEG {
        return Err(GeomError::DegenerateInput("coincident points"));
    }
    let den = 2.0 - 2.0 * (a * b.conj()).re;
    if den.abs() < EPS_DEG {
        return Err(GeomError::DegenerateInput("tangent lines do not meet"));
    }
    Ok(weighted_sum(a, b) / den)
}

/// The point where the ray from the origin through `cen` meets `[a,b]`.
pub fn chord_foot_p(a: Complex64, b: Complex64) -> Result<Complex64> {
    check_in_disk(a)?;
    check_in_disk(b)?;
    Ok(weighted_sum(a, b) / (one_minus_sq_c(a) + one_minus_sq_c(b)))
}

/// Checks that the hyperbolic midpoint `m` of `a, b` is also the hyperbolic
/// midpoint of `cen` and `p`, and that the Euclidean disk about `cen`
/// through `a` is the hyperbolic disk about `m` of radius `ρ(a,b)/2`.
pub fn lem_fuji_check(a: Complex64, b: Complex64) -> Result<MetricReport> {
    let cen = tangent_meet_cen(a, b)?;
    let p = chord_foot_p(a, b)?;
    let m = hyp_midpoint(a, b)?;
    let rho_ab = rho_disk(a, b)?;
    let d1 = rho_disk(cen, m)?;
    let d2 = rho_disk(m, p)?;
    let image = hyp_disk_to_euclidean(m, rho_ab / 2.0)?;
    let radius = (cen - a).norm();
    // Hausdorff distance between two circles.
    let circle_res = (image.center - cen).norm() + (image.radius - radius).abs();
    let mut r = MetricReport::new();
    r.metric("rho_ab", rho_ab)
        .metric("rho_cen_m", d1)
        .metric("rho_m_p", d2)
        .metric("circle_radius", radius)
        .residual("midpoint_balance", (d1 - d2).abs(), LEM_FUJI_TOL)
        .residual("circle_match", circle_res, LEM_FUJI_TOL);
    Ok(r)
}
