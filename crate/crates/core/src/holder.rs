//! Hölder-type bound for quasiregular maps of the disk onto convex domains,
//! with a small catalog of test maps.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{GeomError, Result, EPS_DEG};
use crate::geom::{dist_origin_line, mobius_t};
use crate::hilbert::h_ball;
use crate::hyperbolic::check_in_disk;
use crate::report::MetricReport;
use crate::sample::{self, SAMPLE_RADIUS};
use crate::special::c_of_k;

/// Slack allowed on the sampled margins.
pub const HOLDER_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolderBoundInput {
    pub k: f64,
    pub a: Complex64,
    pub b: Complex64,
}

impl HolderBoundInput {
    pub fn new(k: f64, a: Complex64, b: Complex64) -> Result<Self> {
        if !(k >= 1.0 && k.is_finite()) {
            return Err(GeomError::OutOfDomain(format!("K must be at least 1, got {k}")));
        }
        check_in_disk(a)?;
        check_in_disk(b)?;
        if (a - b).norm() < EPS_DEG {
            return Err(GeomError::DegenerateInput("Hölder bound needs distinct points"));
        }
        Ok(Self { k, a, b })
    }
}

/// `(2c(K)/√(1−m²))·max(h, h^{1/K})` with `h = h_𝔹²(a,b)` and `m` the
/// distance from the origin to `L[a,b]`.
pub fn holder_rhs(inp: &HolderBoundInput) -> Result<f64> {
    let (a, b) = ([inp.a.re, inp.a.im], [inp.b.re, inp.b.im]);
    let h = h_ball(&a, &b)?;
    let m = dist_origin_line(&a, &b)?;
    let c = c_of_k(inp.k)?;
    Ok(2.0 * c / ((1.0 - m) * (1.0 + m)).sqrt() * h.max(h.powf(1.0 / inp.k)))
}

/// Self-maps of the disk with known distortion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QcMapSpec {
    Identity,
    /// `T_a`, a conformal automorphism.
    Mobius(Complex64),
    /// `z ↦ zᵐ`.
    Power(u32),
    /// `z ↦ z|z|^{K−1}`, K-quasiconformal.
    RadialStretch(f64),
}

impl QcMapSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Identity => Ok(()),
            Self::Mobius(a) => {
                if a.norm() < EPS_DEG || a.norm() >= 1.0 {
                    return Err(GeomError::OutOfDomain(format!("Möbius parameter needs 0 < |a| < 1, got {a}")));
                }
                Ok(())
            }
            Self::Power(m) if m >= 1 => Ok(()),
            Self::Power(m) => Err(GeomError::OutOfDomain(format!("power exponent must be at least 1, got {m}"))),
            Self::RadialStretch(k) if k >= 1.0 && k.is_finite() => Ok(()),
            Self::RadialStretch(k) => Err(GeomError::OutOfDomain(format!("stretch K must be at least 1, got {k}"))),
        }
    }

    /// Distortion constant of the map.
    pub fn distortion(&self) -> f64 {
        match *self {
            Self::RadialStretch(k) => k,
            _ => 1.0,
        }
    }
}

impl fmt::Display for QcMapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Identity => write!(f, "identity"),
            Self::Mobius(a) => write!(f, "mobius:{},{}", a.re, a.im),
            Self::Power(m) => write!(f, "power:{m}"),
            Self::RadialStretch(k) => write!(f, "radial-stretch:{k}"),
        }
    }
}

impl FromStr for QcMapSpec {
    type Err = GeomError;

    /// `identity`, `mobius:x[,y]`, `power:m`, `radial-stretch:K`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let bad = |m: &str| GeomError::OutOfDomain(format!("map `{s}`: {m}"));
        let num = |t: &str| t.trim().parse::<f64>().map_err(|_| bad("expected a number"));
        let spec = match (name, arg) {
            ("identity", None) => Self::Identity,
            ("mobius", Some(a)) => {
                let parts: Vec<&str> = a.split(',').collect();
                match parts.as_slice() {
                    [x] => Self::Mobius(Complex64::new(num(x)?, 0.0)),
                    [x, y] => Self::Mobius(Complex64::new(num(x)?, num(y)?)),
                    _ => return Err(bad("expected mobius:x or mobius:x,y")),
                }
            }
            ("power", Some(m)) => Self::Power(m.trim().parse().map_err(|_| bad("expected a positive integer"))?),
            ("radial-stretch", Some(k)) => Self::RadialStretch(num(k)?),
            _ => return Err(bad("unknown map or missing parameter")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn qc_map_eval(spec: &QcMapSpec, z: Complex64) -> Result<Complex64> {
    spec.validate()?;
    if !(z.norm() < 1.0) {
        return Err(GeomError::OutOfDomain(format!("map argument outside the disk (|z| = {})", z.norm())));
    }
    Ok(match *spec {
        QcMapSpec::Identity => z,
        QcMapSpec::Mobius(a) => mobius_t(a, z)?,
        QcMapSpec::Power(m) => z.powu(m),
        QcMapSpec::RadialStretch(k) => {
            let r = z.norm();
            if r == 0.0 {
                z
            } else {
                z * r.powf(k - 1.0)
            }
        }
    })
}

/// Samples `pairs` random pairs and checks `h(f(a), f(b)) ≤ holder_rhs`.
///
/// Also counts how often the bound with `c(K)` in place of `2c(K)` fails;
/// that count is recorded for information only.
pub fn holder_verify(spec: &QcMapSpec, k: f64, pairs: u64, seed: u64) -> Result<MetricReport> {
    spec.validate()?;
    if spec.distortion() > k + EPS_DEG {
        return Err(GeomError::OutOfDomain(format!("map distortion {} exceeds K = {k}", spec.distortion())));
    }
    let mut rng = sample::stream(seed, 0);
    let c = c_of_k(k)?;
    let mut min_margin = f64::INFINITY;
    let mut min_ratio_slack = f64::INFINITY;
    let mut halved_failures = 0u64;
    let mut done = 0u64;
    while done < pairs {
        let a = sample::point_in_disk(&mut rng, SAMPLE_RADIUS);
        let b = sample::point_in_disk(&mut rng, SAMPLE_RADIUS);
        let Ok(inp) = HolderBoundInput::new(k, a, b) else { continue };
        let rhs = holder_rhs(&inp)?;
        let (fa, fb) = (qc_map_eval(spec, a)?, qc_map_eval(spec, b)?);
        let h = h_ball(&[fa.re, fa.im], &[fb.re, fb.im])?;
        min_margin = min_margin.min(rhs - h);
        min_ratio_slack = min_ratio_slack.min(1.0 - h / rhs);
        if h > rhs / 2.0 {
            halved_failures += 1;
        }
        done += 1;
    }
    let mut r = MetricReport::new();
    r.metric("K", k)
        .metric("c_K", c)
        .metric("min_relative_slack", min_ratio_slack)
        .metric("halved_bound_failures", halved_failures as f64)
        .margin_with_slack("holder", min_margin, HOLDER_SLACK);
    r.seed = Some(seed);
    r.count = Some(pairs);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rhs_examples() {
        let inp = HolderBoundInput::new(1.0, c(0.1, 0.0), c(0.6, 0.0)).unwrap();
        let h = h_ball(&[0.1, 0.0], &[0.6, 0.0]).unwrap();
        assert!((holder_rhs(&inp).unwrap() - 2.0 * h).abs() < 1e-14);
        let inp = HolderBoundInput::new(1.0, c(0.5, 0.5), c(-0.5, 0.5)).unwrap();
        let h = 2.0 * 2f64.acosh();
        let want = 2.0 / 0.75f64.sqrt() * h;
        assert!((holder_rhs(&inp).unwrap() - want).abs() < 1e-12);
        assert!((want - 6.0827).abs() < 1e-4);
        let inp2 = HolderBoundInput { k: 2.0, ..inp };
        let want2 = 2.0 * c_of_k(2.0).unwrap() / 0.75f64.sqrt() * h.max(h.sqrt());
        assert!((holder_rhs(&inp2).unwrap() - want2).abs() < 1e-12);
        assert!(HolderBoundInput::new(0.5, c(0.0, 0.0), c(0.1, 0.0)).is_err());
        assert!(HolderBoundInput::new(1.0, c(0.1, 0.0), c(0.1, 0.0)).is_err());
    }

    #[test]
    fn catalog_maps() {
        let z = c(0.3, -0.2);
        assert_eq!(qc_map_eval(&QcMapSpec::Identity, z).unwrap(), z);
        let a = c(0.5, 0.0);
        assert!(qc_map_eval(&QcMapSpec::Mobius(a), a).unwrap().norm() < 1e-16);
        let w = qc_map_eval(&QcMapSpec::RadialStretch(2.0), c(0.64, 0.0)).unwrap();
        assert!((w.re - 0.4096).abs() < 1e-15);
        assert!((qc_map_eval(&QcMapSpec::Power(3), z).unwrap() - z * z * z).norm() < 1e-16);
        assert!(qc_map_eval(&QcMapSpec::Power(0), z).is_err());
        assert!(qc_map_eval(&QcMapSpec::Identity, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn parse_specs() {
        assert_eq!("identity".parse::<QcMapSpec>().unwrap(), QcMapSpec::Identity);
        assert_eq!("mobius:0.5".parse::<QcMapSpec>().unwrap(), QcMapSpec::Mobius(c(0.5, 0.0)));
        assert_eq!("mobius:0.1,-0.2".parse::<QcMapSpec>().unwrap(), QcMapSpec::Mobius(c(0.1, -0.2)));
        assert_eq!("power:2".parse::<QcMapSpec>().unwrap(), QcMapSpec::Power(2));
        assert_eq!("radial-stretch:1.5".parse::<QcMapSpec>().unwrap(), QcMapSpec::RadialStretch(1.5));
        for bad in ["mobius", "mobius:1.2", "power:x", "radial-stretch:0.5", "swirl"] {
            assert!(bad.parse::<QcMapSpec>().is_err(), "{bad}");
        }
        let s = QcMapSpec::Mobius(c(0.1, -0.2));
        assert_eq!(s.to_string().parse::<QcMapSpec>().unwrap(), s);
    }

    #[test]
    fn sampled_verification() {
        let r = holder_verify(&QcMapSpec::Identity, 1.0, 500, 3).unwrap();
        assert!(r.all_pass() && r.margins["holder"] > 0.0);
        let r = holder_verify(&QcMapSpec::RadialStretch(2.0), 2.0, 500, 3).unwrap();
        assert!(r.all_pass());
        assert!(holder_verify(&QcMapSpec::RadialStretch(2.0), 1.5, 10, 3).is_err());
        assert_eq!(holder_verify(&QcMapSpec::Power(2), 1.0, 50, 9), holder_verify(&QcMapSpec::Power(2), 1.0, 50, 9));
    }
}
