//! Hilbert spheres of the unit ball are ellipsoids of revolution.

use crate::error::{GeomError, Result, EPS_DEG};
use crate::hyperbolic::check_in_ball;
use crate::vecn;

/// Ellipsoid of revolution with semi-axis `a_min` along `axis` and
/// `a_max` in every orthogonal direction.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipsoidSpec {
    pub center: Vec<f64>,
    pub axis: Vec<f64>,
    pub a_min: f64,
    pub a_max: f64,
    pub n: usize,
}

impl EllipsoidSpec {
    /// Image of the unit vector `dir` on the surface.
    pub fn surface_point(&self, dir: &[f64]) -> Vec<f64> {
        let along = vecn::dot(dir, &self.axis);
        self.center
            .iter()
            .zip(dir)
            .zip(&self.axis)
            .map(|((c, d), e)| c + self.a_min * along * e + self.a_max * (d - along * e))
            .collect()
    }

    /// Quadratic form value, `1` on the surface.
    pub fn level(&self, x: &[f64]) -> f64 {
        let y = vecn::sub(x, &self.center);
        let along = vecn::dot(&y, &self.axis);
        let perp_sq = (vecn::norm_sq(&y) - along * along).max(0.0);
        (along / self.a_min).powi(2) + perp_sq / (self.a_max * self.a_max)
    }
}

/// The sphere `{x : h_𝔹ⁿ(x,c) = R}`. With `s = |c|` and `k = th(R/2)`, the
/// center is `(1−k²)c/(1−s²k²)`, the semi-axis along `c` is
/// `k(1−s²)/(1−s²k²)` and the others are `k√(1−s²)/√(1−s²k²)`.
pub fn hilbert_sphere_ellipsoid(c: &[f64], r: f64) -> Result<EllipsoidSpec> {
    if c.is_empty() {
        return Err(GeomError::OutOfDomain("empty center".into()));
    }
    check_in_ball(c)?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(GeomError::OutOfDomain(format!("sphere radius must be positive, got {r}")));
    }
    let n = c.len();
    let s = vecn::norm(c);
    let k = (r / 2.0).tanh();
    let one_s2 = (1.0 - s) * (1.0 + s);
    let den = (1.0 - s * k) * (1.0 + s * k);
    let axis = if s < EPS_DEG {
        let mut e = vec![0.0; n];
        e[0] = 1.0;
        e
    } else {
        vecn::scale(c, 1.0 / s)
    };
    let a_min = k * one_s2 / den;
    let a_max = if s < EPS_DEG { k } else { k * (one_s2 / den).sqrt() };
    Ok(EllipsoidSpec {
        center: vecn::scale(c, (1.0 - k) * (1.0 + k) / den),
        axis,
        a_min,
        a_max,
        n,
    })
}

/// `(1 − c·x)² − ch²(R/2)(1−|c|²)(1−|x|²)`, zero on the Hilbert sphere.
pub fn nsc_residual(c: &[f64], r: f64, x: &[f64]) -> f64 {
    let ch = (r / 2.0).cosh();
    let t = 1.0 - vecn::dot(c, x);
    t * t - ch * ch * (1.0 - vecn::norm_sq(c)) * (1.0 - vecn::norm_sq(x))
}
