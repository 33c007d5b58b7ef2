//! Hilbert metric of the unit ball and of convex polygons.

mod ball;
mod sphere;
mod tangency;

pub use ball::{hexagon_corners, hexagon_fit_residual, hilbert_ball_boundary, Polyline, BALL_BISECTION_CAP};
pub use sphere::{hilbert_sphere_ellipsoid, nsc_residual, EllipsoidSpec};
pub use tangency::{
    chordal_projection_f, little_thm_chord_points, little_thm_v, midpoint_configuration, parallel_projection_closed_form,
    projection_pair, second_intersection_f_p, tangency_points, tangency_points_via_center, MidpointConfiguration,
};

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{GeomError, Result, EPS_BND, EPS_DEG};
use crate::geom::{cross_ratio, lis, I};
use crate::hyperbolic::{arch, check_in_ball, check_in_disk, one_minus_sq};
use crate::polygon::ConvexPolygon;
use crate::vecn;

/// A bounded convex domain: the unit ball of ℝⁿ or a convex polygon.
#[derive(Debug, Clone, PartialEq)]
pub enum ConvexDomain {
    Ball(usize),
    Polygon(ConvexPolygon),
}

impl ConvexDomain {
    pub fn ball(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(GeomError::OutOfDomain("ball dimension must be at least 1".into()));
        }
        Ok(Self::Ball(n))
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Ball(n) => *n,
            Self::Polygon(_) => 2,
        }
    }

    fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(GeomError::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    /// Interior margin of `x`; errors when `x` is outside or within
    /// [`EPS_BND`] of the boundary.
    pub fn check_interior(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        match self {
            Self::Ball(_) => {
                let r = vecn::norm(x);
                if r >= 1.0 {
                    return Err(GeomError::OutsideDomain(1.0 - r));
                }
                if 1.0 - r < EPS_BND {
                    return Err(GeomError::NearBoundary(1.0 - r));
                }
                Ok(1.0 - r)
            }
            Self::Polygon(p) => p.check_interior(vecn::c64(x)?),
        }
    }

    /// Signed distance to the boundary (positive inside).
    pub fn signed_distance(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        Ok(match self {
            Self::Ball(_) => 1.0 - vecn::norm(x),
            Self::Polygon(p) => p.signed_distance(vecn::c64(x)?),
        })
    }

    /// Smallest `s > 0` with `x + s·d` on the boundary.
    pub fn ray_exit(&self, x: &[f64], d: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        self.check_dim(d)?;
        match self {
            Self::Ball(_) => {
                let dd = vecn::norm_sq(d);
                if dd < EPS_DEG * EPS_DEG {
                    return Err(GeomError::DegenerateInput("zero ray direction"));
                }
                let q = vecn::dot(x, d);
                let c = one_minus_sq(x);
                if c < 0.0 {
                    return Err(GeomError::OutsideDomain(-c));
                }
                let disc = (q * q + dd * c).sqrt();
                Ok(if q > 0.0 { c / (q + disc) } else { (disc - q) / dd })
            }
            Self::Polygon(p) => p.ray_exit(vecn::c64(x)?, vecn::c64(d)?),
        }
    }

    /// Chord endpoints `u, v` with `u, a, b, v` in this order.
    pub fn chord(&self, a: &[f64], b: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
        self.check_interior(a)?;
        self.check_interior(b)?;
        let d = vecn::sub(b, a);
        if vecn::norm(&d) < EPS_DEG {
            return Err(GeomError::DegenerateInput("chord through coincident points"));
        }
        let back = vecn::scale(&d, -1.0);
        let su = self.ray_exit(a, &back)?;
        let sv = self.ray_exit(b, &d)?;
        Ok((vecn::axpy(a, su, &back), vecn::axpy(b, sv, &d)))
    }

    /// Planar boundary parameterization by arclength fraction `s ∈ [0,1)`.
    pub fn boundary_point(&self, s: f64) -> Result<Complex64> {
        match self {
            Self::Ball(2) => Ok(Complex64::from_polar(1.0, 2.0 * PI * s)),
            Self::Ball(n) => Err(GeomError::DimensionMismatch { expected: 2, got: *n }),
            Self::Polygon(p) => Ok(p.boundary_point(s)),
        }
    }

    /// Contained in the closed unit disk (or ball).
    pub fn is_normalized(&self) -> bool {
        match self {
            Self::Ball(_) => true,
            Self::Polygon(p) => p.max_vertex_norm() <= 1.0 + EPS_DEG,
        }
    }
}

/// Closed-form Hilbert distance of 𝔹ⁿ,
/// `2·arch((1 − a·b)/√((1−|a|²)(1−|b|²)))`.
pub fn h_ball(a: &[f64], b: &[f64]) -> Result<f64> {
    vecn::check_same_dim(a, b)?;
    check_in_ball(a)?;
    check_in_ball(b)?;
    let p = one_minus_sq(a) * one_minus_sq(b);
    let x = (1.0 - vecn::dot(a, b)) / p.sqrt();
    if x >= 2.0 {
        return Ok(2.0 * arch(x));
    }
    // Near x = 1 use the same quantity through sh(h/2), whose numerator
    // (1 − a·b)² − (1−|a|²)(1−|b|²) = |a−b|² − |a∧b|² has no cancellation.
    let num = (vecn::dist_sq(a, b) - vecn::wedge_norm_sq(a, b)).max(0.0);
    Ok(2.0 * (num / p).sqrt().asinh())
}

/// Hilbert distance `log |u,a,b,v|` from the chord through `a` and `b`.
pub fn h_chord(domain: &ConvexDomain, a: &[f64], b: &[f64]) -> Result<f64> {
    domain.check_interior(a)?;
    domain.check_interior(b)?;
    if vecn::dist(a, b) < EPS_DEG {
        return Ok(0.0);
    }
    let (u, v) = domain.chord(a, b)?;
    Ok(cross_ratio(&u, a, b, &v)?.ln())
}

/// Hilbert chord of the unit disk through `a` and `b`: endpoints `u`, `v`
/// and the foot `c` of the perpendicular from the origin.
pub fn h_geodesic_chord_b2(a: Complex64, b: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
    check_in_disk(a)?;
    check_in_disk(b)?;
    if (a - b).norm() < EPS_DEG {
        return Err(GeomError::DegenerateInput("chord through coincident points"));
    }
    let c = lis(a, b, Complex64::new(0.0, 0.0), I * (b - a))?;
    let e = (a - b) / (a - b).norm();
    let half = (1.0 - c.norm_sqr()).max(0.0).sqrt();
    Ok((c + e * half, c - e * half, c))
}

/// The point `p ∈ [a,b]` with `h(a,p) = h(p,b) = h(a,b)/2`.
///
/// Along the chord `[u,v]`, `|u,a,p,v| = |u,p,b,v|` says the ratio
/// `|u−p|/|p−v|` is the geometric mean of the same ratios for `a` and `b`.
pub fn hilbert_midpoint(domain: &ConvexDomain, a: &[f64], b: &[f64]) -> Result<Vec<f64>> {
    let (u, v) = domain.chord(a, b)?;
    let ga = vecn::dist(&u, a) / vecn::dist(a, &v);
    let gb = vecn::dist(&u, b) / vecn::dist(b, &v);
    let g = (ga * gb).sqrt();
    Ok(u.iter().zip(&v).map(|(x, y)| (x + g * y) / (1.0 + g)).collect())
}

/// `2·th(h_D(a,b)/4) − |a−b|`, nonnegative for domains inside the closed
/// unit disk.
pub fn my210_margin(domain: &ConvexDomain, a: &[f64], b: &[f64]) -> Result<f64> {
    if !domain.is_normalized() {
        return Err(GeomError::DomainNotNormalized);
    }
    let h = h_chord(domain, a, b)?;
    Ok(2.0 * (h / 4.0).tanh() - vecn::dist(a, b))
}
