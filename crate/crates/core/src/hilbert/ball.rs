//! Numeric Hilbert circles of planar domains.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::ConvexDomain;
use crate::error::{GeomError, Result, EPS_BND};
use crate::geom::cross;
use crate::polygon::point_segment_distance;

/// Iteration cap of the bisection along each ray.
pub const BALL_BISECTION_CAP: usize = 200;

/// Ordered planar points; `thetas[k]` is the direction angle of `points[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub points: Vec<Complex64>,
    pub thetas: Vec<f64>,
    pub closed: bool,
}

impl Polyline {
    /// All turns of a closed polyline have the same orientation.
    pub fn is_convex(&self) -> bool {
        let n = self.points.len();
        if n < 3 {
            return false;
        }
        let scale = self.points.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
        let (mut pos, mut neg) = (false, false);
        for k in 0..n {
            let p = self.points[k];
            let q = self.points[(k + 1) % n];
            let r = self.points[(k + 2) % n];
            let t = cross(q - p, r - q);
            if t > 1e-14 * scale * scale {
                pos = true;
            } else if t < -1e-14 * scale * scale {
                neg = true;
            }
        }
        !(pos && neg)
    }

    /// Largest distance from a point of `self` to the closed polygon
    /// through `corners`.
    pub fn distance_to_closed(&self, corners: &[Complex64]) -> f64 {
        let m = corners.len();
        self.points
            .iter()
            .map(|&x| {
                (0..m)
                    .map(|j| point_segment_distance(x, corners[j], corners[(j + 1) % m]))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    }
}

fn planar_center(domain: &ConvexDomain, z: &[f64]) -> Result<Complex64> {
    if domain.dim() != 2 {
        return Err(GeomError::DimensionMismatch { expected: 2, got: domain.dim() });
    }
    domain.check_interior(z)?;
    Ok(Complex64::new(z[0], z[1]))
}

/// Point at Hilbert distance `t` from `z` on the ray in direction `d`.
///
/// Along the ray the chord is fixed, with endpoints at parameters
/// `−s_back` and `s_max`, so `h(z, z + s·d)` is the cross-ratio in that
/// parameter.
fn point_on_ray(domain: &ConvexDomain, z: Complex64, d: Complex64, t: f64) -> Result<Complex64> {
    let zs = [z.re, z.im];
    let s_max = domain.ray_exit(&zs, &[d.re, d.im])?;
    let s_back = domain.ray_exit(&zs, &[-d.re, -d.im])?;
    let f = |s: f64| (s / s_back).ln_1p() - (-s / s_max).ln_1p() - t;
    let mut lo = 0.0;
    let mut hi = s_max - EPS_BND;
    if hi <= 0.0 || f(hi) < 0.0 {
        return Err(GeomError::ConvergenceFailure("Hilbert radius not reached inside the boundary margin"));
    }
    for _ in 0..BALL_BISECTION_CAP {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return Ok(z + d * mid);
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(GeomError::ConvergenceFailure("bisection iteration cap reached"))
}

/// Boundary of the Hilbert disk of center `z` and radius `t`, sampled in
/// `ndirs` equally spaced directions.
pub fn hilbert_ball_boundary(domain: &ConvexDomain, z: &[f64], t: f64, ndirs: usize) -> Result<Polyline> {
    let zc = planar_center(domain, z)?;
    if !(t > 0.0 && t.is_finite()) {
        return Err(GeomError::OutOfDomain(format!("radius must be positive, got {t}")));
    }
    if ndirs < 8 {
        return Err(GeomError::OutOfDomain(format!("need at least 8 directions, got {ndirs}")));
    }
    let mut points = Vec::with_capacity(ndirs);
    let mut thetas = Vec::with_capacity(ndirs);
    for k in 0..ndirs {
        let theta = 2.0 * PI * k as f64 / ndirs as f64;
        points.push(point_on_ray(domain, zc, Complex64::from_polar(1.0, theta), t)?);
        thetas.push(theta);
    }
    Ok(Polyline { points, thetas, closed: true })
}

/// Candidate corners of the Hilbert circle in a polygon: its points on the
/// lines joining `z` to each vertex, sorted by angle around `z`.
pub fn hexagon_corners(domain: &ConvexDomain, z: &[f64], t: f64) -> Result<Vec<Complex64>> {
    let zc = planar_center(domain, z)?;
    let ConvexDomain::Polygon(poly) = domain else {
        return Err(GeomError::InvalidPolygon("corner fit needs a polygon domain".into()));
    };
    let mut dirs: Vec<Complex64> = Vec::new();
    for &v in poly.vertices() {
        let d = (v - zc) / (v - zc).norm();
        dirs.push(d);
        dirs.push(-d);
    }
    dirs.sort_by(|a, b| a.arg().total_cmp(&b.arg()));
    dirs.iter().map(|&d| point_on_ray(domain, zc, d, t)).collect()
}

/// Largest distance between the traced circle and the polygon through its
/// corners on the vertex lines.
pub fn hexagon_fit_residual(domain: &ConvexDomain, z: &[f64], t: f64, polyline: &Polyline) -> Result<f64> {
    let corners = hexagon_corners(domain, z, t)?;
    Ok(polyline.distance_to_closed(&corners))
}
