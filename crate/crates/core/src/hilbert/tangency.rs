//! Circles through two points tangent to the unit circle, and the
//! projections of circle arcs onto chords.

use num_complex::Complex64;

use crate::error::{GeomError, Result, EPS_DEG};
use crate::geom::{check_on_circle, cross, lis, lis_unit_circle};
use crate::hyperbolic::{check_in_disk, one_minus_sq_c};

/// The two points `w` of the unit circle at which a circle through `a` and
/// `b` touches it: `(|a|²−|b|² ± i|a−b|√((1−|a|²)(1−|b|²))) / k` with
/// `k = (a−b)āb̄ + ā − b̄`.
pub fn tangency_points(a: Complex64, b: Complex64) -> Result<(Complex64, Complex64)> {
    check_in_disk(a)?;
    check_in_disk(b)?;
    if (a - b).norm() < EPS_DEG {
        return Err(GeomError::DegenerateInput("tangency points of coincident points"));
    }
    let k = (a - b) * a.conj() * b.conj() + a.conj() - b.conj();
    if k.norm() < EPS_DEG {
        return Err(GeomError::DegenerateInput("tangency denominator vanishes"));
    }
    let re = a.norm_sqr() - b.norm_sqr();
    let im = (a - b).norm() * (one_minus_sq_c(a) * one_minus_sq_c(b)).sqrt();
    Ok((Complex64::new(re, im) / k, Complex64::new(re, -im) / k))
}

/// The same points through `c = (a(1−|b|²) − b(1−|a|²))/(|a|²−|b|²)` as
/// `(1 ± i·sgn(|a|²−|b|²)·√(|c|²−1))/c̄`, returned in the order of
/// [`tangency_points`]. Needs `|a| ≠ |b|`. Also returns `c`.
pub fn tangency_points_via_center(a: Complex64, b: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
    check_in_disk(a)?;
    check_in_disk(b)?;
    let diff = a.norm_sqr() - b.norm_sqr();
    if diff.abs() < EPS_DEG {
        return Err(GeomError::DegenerateInput("|a| = |b|"));
    }
    let c = (a * one_minus_sq_c(b) - b * one_minus_sq_c(a)) / diff;
    let r = (c.norm_sqr() - 1.0).max(0.0).sqrt() * diff.signum();
    let cb = c.conj();
    Ok((Complex64::new(1.0, r) / cb, Complex64::new(1.0, -r) / cb, c))
}

/// `F(z) = LIS[u,v,z,w] = ((uv−uw−vw)z + uvw)/(−wz + uv)`, mapping the arc
/// from `u` to `v` away from `w` onto the chord `[u,v]`.
pub fn chordal_projection_f(u: Complex64, v: Complex64, w: Complex64, z: Complex64) -> Result<Complex64> {
    for p in [u, v, w, z] {
        check_on_circle(p)?;
    }
    if (w - u).norm() < EPS_DEG || (w - v).norm() < EPS_DEG || (u - v).norm() < EPS_DEG {
        return Err(GeomError::DegenerateInput("projection center coincides with a chord endpoint"));
    }
    let den = -w * z + u * v;
    if den.norm() < EPS_DEG {
        return Err(GeomError::DegenerateInput("projection line parallel to the chord"));
    }
    Ok(((u * v - u * w - v * w) * z + u * v * w) / den)
}

/// Second intersection of `L[p,z]` with the unit circle,
/// `f_p(z) = −(z−p)/(1−p̄z)`.
pub fn second_intersection_f_p(p: Complex64, z: Complex64) -> Result<Complex64> {
    check_in_disk(p)?;
    check_on_circle(z)?;
    Ok(-(z - p) / (1.0 - p.conj() * z))
}

/// `a = LIS[u,v,c,w]` and `b = LIS[u,v,d,w]` for five points of the circle.
pub fn projection_pair(u: Complex64, c: Complex64, d: Complex64, v: Complex64, w: Complex64) -> Result<(Complex64, Complex64)> {
    Ok((lis_unit_circle(u, v, c, w)?, lis_unit_circle(u, v, d, w)?))
}

/// Closed forms of [`projection_pair`] when `L[u,v] ∥ L[c,d]`:
/// `a = ((u+v−d)w − cd)/(w−d)`, `b = ((u+v−c)w − cd)/(w−c)`.
pub fn parallel_projection_closed_form(
    u: Complex64,
    c: Complex64,
    d: Complex64,
    v: Complex64,
    w: Complex64,
) -> Result<(Complex64, Complex64)> {
    for p in [u, c, d, v, w] {
        check_on_circle(p)?;
    }
    if (u * v - c * d).norm() > 1e-9 {
        return Err(GeomError::DegenerateInput("chords are not parallel"));
    }
    if (w - c).norm() < EPS_DEG || (w - d).norm() < EPS_DEG {
        return Err(GeomError::DegenerateInput("projection center on the chord [c,d]"));
    }
    let cd = c * d;
    Ok((((u + v - d) * w - cd) / (w - d), ((u + v - c) * w - cd) / (w - c)))
}

/// Points of the midpoint construction for `u, c, d, v, w` in circular
/// order with `L[u,v] ∥ L[c,d]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MidpointConfiguration {
    pub a: Complex64,
    pub b: Complex64,
    /// Midpoint of the arc between `c` and `d` away from `u, v, w`.
    pub m: Complex64,
    /// `LIS[u,v,w,m]`.
    pub p: Complex64,
}

pub fn midpoint_configuration(
    u: Complex64,
    c: Complex64,
    d: Complex64,
    v: Complex64,
    w: Complex64,
) -> Result<MidpointConfiguration> {
    let (a, b) = projection_pair(u, c, d, v, w)?;
    let s = c + d;
    if s.norm() < EPS_DEG {
        return Err(GeomError::DegenerateInput("c and d are antipodal"));
    }
    let mut m = s / s.norm();
    if cross(d - c, m - c) * cross(d - c, u - c) > 0.0 {
        m = -m;
    }
    let p = lis(u, v, w, m)?;
    Ok(MidpointConfiguration { a, b, m, p })
}

/// For `a, b, c, d` in circular order and `u` on the arc from `a` to `b`
/// away from `c, d`: `a₂ = LIS[a,b,u,d]`, `b₂ = LIS[a,b,u,c]`.
pub fn little_thm_chord_points(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
    u: Complex64,
) -> Result<(Complex64, Complex64)> {
    Ok((lis_unit_circle(a, b, u, d)?, lis_unit_circle(a, b, u, c)?))
}

/// `v = LIS[a₂, c₂, b₂, d₂]` with `c₂ = f_p(c)`, `d₂ = f_p(d)` for `p` on
/// `[a,b]`; this point lies on the unit circle.
pub fn little_thm_v(a: Complex64, b: Complex64, c: Complex64, d: Complex64, u: Complex64, p: Complex64) -> Result<Complex64> {
    let (a2, b2) = little_thm_chord_points(a, b, c, d, u)?;
    let c2 = second_intersection_f_p(p, c)?;
    let d2 = second_intersection_f_p(p, d)?;
    lis(a2, c2, b2, d2)
}
