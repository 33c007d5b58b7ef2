//! Elliptic integral, Grötzsch ring modulus, distortion function and the
//! Schwarz-lemma constant of quasiregular maps.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use crate::error::{GeomError, Result};

const AGM_MAX_ITER: usize = 64;

/// Arithmetic-geometric mean of two positive reals.
pub fn agm(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite()) {
        return Err(GeomError::OutOfDomain(format!("agm needs positive finite arguments, got ({x}, {y})")));
    }
    let (mut a, mut g) = (x, y);
    for _ in 0..AGM_MAX_ITER {
        if (a - g).abs() <= 1e-15 * a {
            break;
        }
        let next = 0.5 * (a + g);
        g = (a * g).sqrt();
        a = next;
    }
    Ok(0.5 * (a + g))
}

/// `√((1−r)(1+r))`.
fn complement(r: f64) -> f64 {
    ((1.0 - r) * (1.0 + r)).sqrt()
}

/// Complete elliptic integral of the first kind, `𝒦(r) = π/(2·agm(1, r′))`.
pub fn ell_k(r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(GeomError::OutOfDomain(format!("K(r) needs 0 ≤ r < 1, got {r}")));
    }
    Ok(PI / (2.0 * agm(1.0, complement(r))?))
}

/// `μ` from the pair `(r, r′)`; lets callers keep `r′` exact near `r = 1`.
fn mu_pair(r: f64, rp: f64) -> f64 {
    // Both arguments are positive, so agm cannot fail.
    FRAC_PI_2 * agm(1.0, rp).unwrap_or(f64::NAN) / agm(1.0, r).unwrap_or(f64::NAN)
}

/// Modulus of the Grötzsch ring, `μ(r) = (π/2)·𝒦(r′)/𝒦(r)`.
pub fn mu(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(GeomError::OutOfDomain(format!("μ(r) needs 0 < r < 1, got {r}")));
    }
    Ok(mu_pair(r, complement(r)))
}

/// `μ′(r) = −π²/(4 r r′² 𝒦(r)²)`.
fn mu_derivative(r: f64, rp: f64) -> f64 {
    let k = PI / (2.0 * agm(1.0, rp).unwrap_or(f64::NAN));
    -PI * PI / (4.0 * r * rp * rp * k * k)
}

/// Largest `y` handled before `r = μ⁻¹(y) ≈ 4e^{−y}` leaves the normal range.
const MU_INV_MAX: f64 = 700.0;

/// Solves `μ(r) = y` for `y ≥ π/2`, returning `(r, r′)`.
fn mu_inv_upper(y: f64) -> Result<(f64, f64)> {
    // μ(r) is close to log(4/r) for small r; bracket around that in log r.
    let f = |lr: f64| {
        let r = lr.exp();
        mu_pair(r, complement(r)) - y
    };
    let mut lo = 4f64.ln() - y - 2.0;
    let hi0 = FRAC_1_SQRT_2.ln();
    while f(lo) < 0.0 {
        lo -= 2.0;
        if lo < -750.0 {
            return Err(GeomError::ConvergenceFailure("μ⁻¹ bracket"));
        }
    }
    let mut hi = hi0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut r = (0.5 * (lo + hi)).exp();
    for _ in 0..3 {
        let rp = complement(r);
        let step = (mu_pair(r, rp) - y) / mu_derivative(r, rp);
        let next = r - step;
        if !(next > 0.0 && next < 1.0) {
            break;
        }
        r = next;
    }
    Ok((r, complement(r)))
}

/// `(r, r′)` with `μ(r) = y`, using `μ(r)μ(r′) = π²/4` below `π/2`.
fn mu_inv_pair(y: f64) -> Result<(f64, f64)> {
    if !(y > 0.0 && y.is_finite()) {
        return Err(GeomError::OutOfDomain(format!("μ⁻¹(y) needs y > 0, got {y}")));
    }
    if y >= FRAC_PI_2 {
        if y > MU_INV_MAX {
            return Err(GeomError::ConvergenceFailure("μ⁻¹ result underflows"));
        }
        mu_inv_upper(y)
    } else {
        let yc = PI * PI / (4.0 * y);
        if yc > MU_INV_MAX {
            return Err(GeomError::ConvergenceFailure("μ⁻¹ result rounds to 1"));
        }
        let (rp, r) = mu_inv_upper(yc)?;
        Ok((r, rp))
    }
}

/// Inverse of [`mu`].
pub fn mu_inv(y: f64) -> Result<f64> {
    Ok(mu_inv_pair(y)?.0)
}

/// Grötzsch capacity in the plane, `γ₂(s) = 2π/μ(1/s)`.
pub fn gamma2(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(GeomError::OutOfDomain(format!("γ₂(s) needs s > 1, got {s}")));
    }
    Ok(gamma2_ln(s.ln(), (s - 1.0).ln()))
}

/// `γ₂(s)` from `ln s` and `ln(s−1)`, keeping `1/s` and its complement
/// accurate for `s` near 1.
fn gamma2_ln(ln_s: f64, ln_s1: f64) -> f64 {
    let r = (-ln_s).exp();
    // r′ = √((s−1)(s+1))/s
    let rp = (0.5 * (ln_s1 + (2.0 + ln_s1.exp()).ln()) - ln_s).exp();
    2.0 * PI / mu_pair(r, rp)
}

/// Inverse of [`gamma2`] by bisection in `ln(s−1)`.
pub fn gamma2_inv(t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(GeomError::OutOfDomain(format!("γ₂⁻¹(t) needs t > 0, got {t}")));
    }
    let g = |x: f64| gamma2_ln(x.exp().ln_1p(), x) - t;
    let (mut lo, mut hi) = (-1.0, 1.0);
    while g(lo) < 0.0 {
        lo *= 2.0;
        if lo < -700.0 {
            return Err(GeomError::ConvergenceFailure("γ₂⁻¹ bracket"));
        }
    }
    while g(hi) > 0.0 {
        hi *= 2.0;
        if hi > 700.0 {
            return Err(GeomError::ConvergenceFailure("γ₂⁻¹ bracket"));
        }
    }
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(1.0 + (0.5 * (lo + hi)).exp())
}

fn check_phi_args(k: f64, r: f64) -> Result<()> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(GeomError::OutOfDomain(format!("φ_K needs K > 0, got {k}")));
    }
    if !(0.0..=1.0).contains(&r) {
        return Err(GeomError::OutOfDomain(format!("φ_K needs 0 ≤ r ≤ 1, got {r}")));
    }
    Ok(())
}

/// `(φ_K(r), √(1−φ_K(r)²))` for `0 < r < 1`, clamped to the endpoints when
/// the result is not representable.
pub(crate) fn phi_pair(k: f64, r: f64, rp: f64) -> (f64, f64) {
    let y = mu_pair(r, rp) / k;
    match mu_inv_pair(y) {
        Ok(p) => p,
        Err(_) if y >= FRAC_PI_2 => (0.0, 1.0),
        Err(_) => (1.0, 0.0),
    }
}

/// Distortion function `φ_K(r) = μ⁻¹(μ(r)/K)`.
pub fn phi_k(k: f64, r: f64) -> Result<f64> {
    check_phi_args(k, r)?;
    if r == 0.0 || r == 1.0 || k == 1.0 {
        return Ok(r);
    }
    Ok(phi_pair(k, r, complement(r)).0)
}

/// `φ_K(r) = 1/γ₂⁻¹(K·γ₂(1/r))`, evaluated through the capacity.
pub fn phi_k_via_gamma(k: f64, r: f64) -> Result<f64> {
    check_phi_args(k, r)?;
    if r == 0.0 || r == 1.0 {
        return Ok(r);
    }
    Ok(1.0 / gamma2_inv(k * gamma2(1.0 / r)?)?)
}

/// `th(1/2)`.
pub fn th_half() -> f64 {
    0.5f64.tanh()
}

/// Schwarz-lemma constant `c(K) = 2·arth(φ_K(th ½))`.
pub fn c_of_k(k: f64) -> Result<f64> {
    if !(k >= 1.0 && k.is_finite()) {
        return Err(GeomError::OutOfDomain(format!("c(K) needs K ≥ 1, got {k}")));
    }
    let r = th_half();
    if k == 1.0 {
        return Ok(1.0);
    }
    // 1/ch(1/2) is the exact complement of th(1/2).
    let (p, pp) = phi_pair(k, r, 1.0 / 0.5f64.cosh());
    // arth φ = log((1+φ)/φ′)
    Ok(2.0 * ((1.0 + p) / pp).ln())
}

/// `arch(e)·th(arch(e))`.
pub fn bound_u() -> f64 {
    let e = std::f64::consts::E;
    let a = e.acosh();
    a * a.tanh()
}

/// `log(2(1 + √(1 − e⁻²)))`.
pub fn bound_v() -> f64 {
    let e = std::f64::consts::E;
    (2.0 * (1.0 + (1.0 - 1.0 / (e * e)).sqrt())).ln()
}

/// The chain `K ≤ u(K−1)+1 ≤ log ch(K·arch e) ≤ c(K) ≤ v(K−1)+K`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CBounds {
    pub k: f64,
    pub linear_lower: f64,
    pub log_cosh_lower: f64,
    pub c: f64,
    pub upper: f64,
}

impl CBounds {
    pub fn values(&self) -> [f64; 5] {
        [self.k, self.linear_lower, self.log_cosh_lower, self.c, self.upper]
    }

    /// Smallest consecutive gap of the chain; nonnegative when it is ordered.
    pub fn min_gap(&self) -> f64 {
        self.values().windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min)
    }
}

pub fn c_bounds(k: f64) -> Result<CBounds> {
    let c = c_of_k(k)?;
    let a = std::f64::consts::E.acosh();
    let x = k * a;
    Ok(CBounds {
        k,
        linear_lower: bound_u() * (k - 1.0) + 1.0,
        log_cosh_lower: x + (-2.0 * x).exp().ln_1p() - 2f64.ln(),
        c,
        upper: bound_v() * (k - 1.0) + k,
    })
}
