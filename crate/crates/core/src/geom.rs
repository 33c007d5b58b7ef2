//! Planar and n-dimensional primitives: cross-ratios, line intersections,
//! circles through three points and Möbius self-maps of the disk.

use num_complex::Complex64;

use crate::error::{GeomError, Result, EPS_DEG};
use crate::vecn;

/// Tolerance for "lies on the unit circle".
pub const ON_CIRCLE_TOL: f64 = 1e-10;

pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

/// Absolute cross-ratio `|u,a,b,v| = |u−b||a−v| / (|u−a||b−v|)`.
pub fn cross_ratio(u: &[f64], a: &[f64], b: &[f64], v: &[f64]) -> Result<f64> {
    let ua = vecn::dist(u, a);
    let bv = vecn::dist(b, v);
    if ua < EPS_DEG || bv < EPS_DEG {
        return Err(GeomError::DegenerateInput("cross-ratio denominator vanishes"));
    }
    Ok(vecn::dist(u, b) * vecn::dist(a, v) / (ua * bv))
}

/// [`cross_ratio`] for points of the complex plane.
pub fn cross_ratio_c(u: Complex64, a: Complex64, b: Complex64, v: Complex64) -> Result<f64> {
    let ua = (u - a).norm();
    let bv = (b - v).norm();
    if ua < EPS_DEG || bv < EPS_DEG {
        return Err(GeomError::DegenerateInput("cross-ratio denominator vanishes"));
    }
    Ok((u - b).norm() * (a - v).norm() / (ua * bv))
}

/// The line through two distinct planar points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line2 {
    pub p: Complex64,
    pub q: Complex64,
}

impl Line2 {
    pub fn new(p: Complex64, q: Complex64) -> Result<Self> {
        if (p - q).norm() < EPS_DEG {
            return Err(GeomError::DegenerateInput("line through coincident points"));
        }
        Ok(Self { p, q })
    }

    /// Signed distance of `z` from the line, positive on the left of `p → q`.
    pub fn signed_distance(&self, z: Complex64) -> f64 {
        let d = self.q - self.p;
        cross(d, z - self.p) / d.norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle2 {
    pub center: Complex64,
    pub radius: f64,
}

/// `Im(conj(x)·y)`, the planar cross product.
#[inline]
pub fn cross(x: Complex64, y: Complex64) -> f64 {
    x.re * y.im - x.im * y.re
}

/// Intersection point of the lines `L[a,b]` and `L[c,d]`.
pub fn lis(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Complex64> {
    if (a - b).norm() < EPS_DEG || (c - d).norm() < EPS_DEG {
        return Err(GeomError::DegenerateInput("line through coincident points"));
    }
    let den = (a - b).conj() * (c - d) - (a - b) * (c - d).conj();
    if den.norm() < EPS_DEG {
        return Err(GeomError::ParallelLines);
    }
    let num = (a.conj() * b - a * b.conj()) * (c - d) - (a - b) * (c.conj() * d - c * d.conj());
    Ok(num / den)
}

pub(crate) fn check_on_circle(z: Complex64) -> Result<()> {
    let r = z.norm();
    if (r - 1.0).abs() > ON_CIRCLE_TOL {
        return Err(GeomError::NotOnCircle(r));
    }
    Ok(())
}

/// Intersection of the chords `[a,b]` and `[c,d]` of the unit circle, using
/// the simplification available when all four points have modulus one.
pub fn lis_unit_circle(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Complex64> {
    for z in [a, b, c, d] {
        check_on_circle(z)?;
    }
    if (a - b).norm() < EPS_DEG || (c - d).norm() < EPS_DEG {
        return Err(GeomError::DegenerateInput("chord through coincident points"));
    }
    let den = a * b - c * d;
    if den.norm() < EPS_DEG {
        return Err(GeomError::ParallelLines);
    }
    Ok((a * b * (c + d) - c * d * (a + b)) / den)
}

/// The circle through three non-collinear points, with its center found as
/// the intersection of two perpendicular bisectors.
pub fn circle_through(a: Complex64, b: Complex64, c: Complex64) -> Result<Circle2> {
    let area2 = cross(b - a, c - a).abs();
    if area2 / 2.0 < EPS_DEG {
        return Err(GeomError::CollinearPoints);
    }
    let m1 = (a + b) * 0.5;
    let m2 = (b + c) * 0.5;
    let center = lis(m1, m1 + I * (b - a), m2, m2 + I * (c - b)).map_err(|e| match e {
        GeomError::ParallelLines => GeomError::CollinearPoints,
        other => other,
    })?;
    Ok(Circle2 { center, radius: (center - a).norm() })
}

/// The disk automorphism `T_a(z) = (z − a)/(1 − āz)`.
pub fn mobius_t(a: Complex64, z: Complex64) -> Result<Complex64> {
    let r = a.norm();
    if r >= 1.0 || r == 0.0 {
        return Err(GeomError::OutOfDomain(format!("T_a needs 0 < |a| < 1, got |a| = {r}")));
    }
    if z.norm() > 1.0 + ON_CIRCLE_TOL {
        return Err(GeomError::OutOfDomain(format!("T_a applied outside the closed disk (|z| = {})", z.norm())));
    }
    Ok((z - a) / (1.0 - a.conj() * z))
}

/// Euclidean distance from the origin to the line `L[a,b]`, in any dimension.
pub fn dist_origin_line(a: &[f64], b: &[f64]) -> Result<f64> {
    vecn::check_same_dim(a, b)?;
    let ab = vecn::dist(a, b);
    if ab < EPS_DEG {
        return Err(GeomError::DegenerateInput("line through coincident points"));
    }
    Ok(vecn::wedge_norm_sq(a, b).sqrt() / ab)
}

/// A general Möbius self-map of the unit disk, `z ↦ e^{iθ}(z − a)/(1 − āz)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskAutomorphism {
    pub rotation: f64,
    pub a: Complex64,
}

impl DiskAutomorphism {
    pub fn new(rotation: f64, a: Complex64) -> Result<Self> {
        if a.norm() >= 1.0 {
            return Err(GeomError::OutOfDomain(format!("automorphism parameter |a| = {} ≥ 1", a.norm())));
        }
        Ok(Self { rotation, a })
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        Complex64::from_polar(1.0, self.rotation) * (z - self.a) / (1.0 - self.a.conj() * z)
    }
}
