//! Apollonian and Möbius metrics and the inequalities tying them to the
//! Hilbert and hyperbolic metrics.

use num_complex::Complex64;

use crate::error::{GeomError, Result, EPS_DEG};
use crate::hilbert::{h_chord, ConvexDomain};
use crate::hyperbolic::{rho_ball, rho_disk};
use crate::report::MetricReport;
use crate::vecn;

/// Number of samples per edge when the per-edge critical-point equation
/// degenerates.
pub const APOLLONIAN_FALLBACK_SAMPLES: usize = 1024;

/// Side of the coarse boundary grid of [`mobius_delta_sampled`].
pub const DELTA_GRID: usize = 256;

/// Cells refined after the coarse pass.
pub const DELTA_TOP_CELLS: usize = 16;

/// `sup_{x ∈ ∂P} ½·log(|x−b|²/|x−a|²)`, edge by edge.
///
/// With `x = p + s·e`, both squared distances are monic quadratics in `s`
/// up to the factor `|e|²`, so the derivative numerator of their quotient
/// is quadratic.
fn sup_log_ratio(poly: &crate::polygon::ConvexPolygon, a: Complex64, b: Complex64) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for (p, q) in poly.edges() {
        let e = q - p;
        let l = e.norm_sqr();
        let n1 = 2.0 * (e.conj() * (p - b)).re;
        let n0 = (p - b).norm_sqr();
        let d1 = 2.0 * (e.conj() * (p - a)).re;
        let d0 = (p - a).norm_sqr();
        let value = |s: f64| {
            let num = (l * s + n1) * s + n0;
            let den = (l * s + d1) * s + d0;
            0.5 * (num / den).ln()
        };
        let mut candidates = vec![0.0, 1.0];
        let qa = l * (d1 - n1);
        let qb = 2.0 * l * (d0 - n0);
        let qc = n1 * d0 - n0 * d1;
        let scale = 2.0 * l * e.norm() * (b - a).norm();
        if qa.abs() > 1e-14 * scale {
            let disc = qb * qb - 4.0 * qa * qc;
            if disc >= 0.0 {
                let sq = disc.sqrt();
                let t = -0.5 * (qb + sq.copysign(qb));
                candidates.push(t / qa);
                if t != 0.0 {
                    candidates.push(qc / t);
                }
            }
        } else {
            if qb.abs() > EPS_DEG * scale {
                candidates.push(-qc / qb);
            }
            let m = APOLLONIAN_FALLBACK_SAMPLES;
            candidates.extend((1..m).map(|k| k as f64 / m as f64));
        }
        for s in candidates {
            if (0.0..=1.0).contains(&s) {
                best = best.max(value(s));
            }
        }
    }
    best
}

/// Apollonian metric `α_D(a,b)`; equals [`rho_ball`] on the ball.
pub fn apollonian(domain: &ConvexDomain, a: &[f64], b: &[f64]) -> Result<f64> {
    domain.check_interior(a)?;
    domain.check_interior(b)?;
    if vecn::dist(a, b) < EPS_DEG {
        return Ok(0.0);
    }
    match domain {
        ConvexDomain::Ball(_) => rho_ball(a, b),
        ConvexDomain::Polygon(p) => {
            let (ac, bc) = (vecn::c64(a)?, vecn::c64(b)?);
            Ok(sup_log_ratio(p, ac, bc) + sup_log_ratio(p, bc, ac))
        }
    }
}

/// `α_D(a,b) − h_D(a,b)`.
pub fn h_le_alpha_margin(domain: &ConvexDomain, a: &[f64], b: &[f64]) -> Result<f64> {
    Ok(apollonian(domain, a, b)? - h_chord(domain, a, b)?)
}

/// Value of the Möbius metric with the boundary pair attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaEstimate {
    pub value: f64,
    /// Boundary points `u`, `v` and their parameters, when sampled.
    pub certificate: Option<DeltaCertificate>,
    pub evaluations: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaCertificate {
    pub s: f64,
    pub t: f64,
    pub u: Complex64,
    pub v: Complex64,
    pub cross_ratio: f64,
}

/// Möbius metric `δ_D(a,b) = log(1 + sup |u,a,v,b|)`; exact on the ball.
pub fn mobius_delta(domain: &ConvexDomain, a: &[f64], b: &[f64], budget: u64) -> Result<DeltaEstimate> {
    match domain {
        ConvexDomain::Ball(_) => {
            domain.check_interior(a)?;
            domain.check_interior(b)?;
            Ok(DeltaEstimate { value: rho_ball(a, b)?, certificate: None, evaluations: 0 })
        }
        ConvexDomain::Polygon(_) => mobius_delta_sampled(domain, a, b, budget),
    }
}

/// `|u,a,v,b| = |u−v||a−b| / (|u−a||v−b|)`.
fn boundary_cross_ratio(u: Complex64, a: Complex64, v: Complex64, b: Complex64) -> f64 {
    (u - v).norm() * (a - b).norm() / ((u - a).norm() * (v - b).norm())
}

struct DeltaSearch<'a> {
    domain: &'a ConvexDomain,
    a: Complex64,
    b: Complex64,
    budget: u64,
    used: u64,
    best: DeltaCertificate,
}

impl DeltaSearch<'_> {
    fn eval(&self, s: f64, t: f64) -> DeltaCertificate {
        let u = self.domain.boundary_point(s).unwrap_or_default();
        let v = self.domain.boundary_point(t).unwrap_or_default();
        DeltaCertificate { s, t, u, v, cross_ratio: boundary_cross_ratio(u, self.a, v, self.b) }
    }

    fn refine_eval(&mut self, s: f64, t: f64) -> Option<f64> {
        if self.used >= self.budget {
            return None;
        }
        self.used += 1;
        let c = self.eval(s, t);
        if c.cross_ratio > self.best.cross_ratio {
            self.best = c;
        }
        Some(c.cross_ratio)
    }

    /// Golden-section maximization of one coordinate on `[lo, hi]`.
    fn golden(&mut self, fixed: f64, first: bool, mut lo: f64, mut hi: f64, iters: usize) -> Option<f64> {
        let g = 0.5 * (5f64.sqrt() - 1.0);
        let at = |x: f64| if first { (x, fixed) } else { (fixed, x) };
        let mut x1 = hi - g * (hi - lo);
        let mut x2 = lo + g * (hi - lo);
        let (p, q) = at(x1);
        let mut f1 = self.refine_eval(p, q)?;
        let (p, q) = at(x2);
        let mut f2 = self.refine_eval(p, q)?;
        for _ in 0..iters {
            if f1 < f2 {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                let (p, q) = at(x2);
                f2 = self.refine_eval(p, q)?;
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                let (p, q) = at(x1);
                f1 = self.refine_eval(p, q)?;
            }
        }
        Some(if f1 > f2 { x1 } else { x2 })
    }
}

/// [`mobius_delta`] by boundary-pair search: a full coarse grid, then
/// coordinate-wise golden-section refinement of the best cells using at
/// most `budget` further evaluations. Works on any planar domain.
pub fn mobius_delta_sampled(domain: &ConvexDomain, a: &[f64], b: &[f64], budget: u64) -> Result<DeltaEstimate> {
    if domain.dim() != 2 {
        return Err(GeomError::DimensionMismatch { expected: 2, got: domain.dim() });
    }
    domain.check_interior(a)?;
    domain.check_interior(b)?;
    let (ac, bc) = (vecn::c64(a)?, vecn::c64(b)?);
    if (ac - bc).norm() < EPS_DEG {
        return Ok(DeltaEstimate { value: 0.0, certificate: None, evaluations: 0 });
    }
    let n = DELTA_GRID;
    let h = 1.0 / n as f64;
    let pts: Vec<Complex64> =
        (0..n).map(|k| domain.boundary_point((k as f64 + 0.5) * h)).collect::<Result<_>>()?;
    let mut cells: Vec<(f64, usize, usize)> = Vec::with_capacity(n * n);
    for (i, &u) in pts.iter().enumerate() {
        for (j, &v) in pts.iter().enumerate() {
            if i != j {
                cells.push((boundary_cross_ratio(u, ac, v, bc), i, j));
            }
        }
    }
    cells.sort_by(|x, y| y.0.total_cmp(&x.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));
    let (_, i0, j0) = cells[0];
    let mut search = DeltaSearch { domain, a: ac, b: bc, budget, used: 0, best: DeltaCertificate {
        s: 0.0, t: 0.0, u: Complex64::default(), v: Complex64::default(), cross_ratio: f64::NEG_INFINITY,
    } };
    search.best = search.eval((i0 as f64 + 0.5) * h, (j0 as f64 + 0.5) * h);
    'cells: for &(_, i, j) in cells.iter().take(DELTA_TOP_CELLS) {
        let (mut s, mut t) = ((i as f64 + 0.5) * h, (j as f64 + 0.5) * h);
        let mut width = h;
        for _ in 0..4 {
            match search.golden(t, true, s - width, s + width, 30) {
                Some(x) => s = x,
                None => break 'cells,
            }
            match search.golden(s, false, t - width, t + width, 30) {
                Some(x) => t = x,
                None => break 'cells,
            }
            width *= 0.5;
        }
    }
    let best = search.best;
    Ok(DeltaEstimate {
        value: best.cross_ratio.ln_1p(),
        certificate: Some(best),
        evaluations: (n * (n - 1)) as u64 + search.used,
    })
}

/// Margins of `α/2 ≤ ρ ≤ 4·sh(α/2)` on the disk, where `α = ρ`.
pub fn bthm_margin_disk(a: Complex64, b: Complex64) -> Result<MetricReport> {
    let rho = rho_disk(a, b)?;
    let alpha = rho;
    let mut r = MetricReport::new();
    r.metric("alpha", alpha)
        .metric("rho", rho)
        .margin("half_alpha_le_rho", rho - alpha / 2.0)
        .margin("rho_le_4sh_half_alpha", 4.0 * (alpha / 2.0).sinh() - rho);
    Ok(r)
}
