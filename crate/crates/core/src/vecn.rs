//! Coordinate-vector helpers for points of ℝⁿ.

use std::ops::Deref;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// A point of ℝⁿ with finite coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointN(Vec<f64>);

impl PointN {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(GeomError::DegenerateInput("point needs at least one coordinate"));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(GeomError::DegenerateInput("non-finite coordinate"));
        }
        Ok(Self(coords))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0.0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    /// The planar point as a complex number. Panics unless `dim() == 2`.
    pub fn to_complex(&self) -> Complex64 {
        assert_eq!(self.0.len(), 2, "to_complex on a point of dimension {}", self.0.len());
        Complex64::new(self.0[0], self.0[1])
    }
}

impl Deref for PointN {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl From<Complex64> for PointN {
    fn from(z: Complex64) -> Self {
        Self(vec![z.re, z.im])
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm_sq(a: &[f64]) -> f64 {
    dot(a, a)
}

pub fn norm(a: &[f64]) -> f64 {
    norm_sq(a).sqrt()
}

pub fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    dist_sq(a, b).sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

/// `a + s·d`
pub fn axpy(a: &[f64], s: f64, d: &[f64]) -> Vec<f64> {
    a.iter().zip(d).map(|(x, y)| x + s * y).collect()
}

/// Squared norm of the bivector `a ∧ b`, i.e. `|a|²|b|² − (a·b)²`, summed
/// over coordinate planes so that it stays accurate for nearly parallel
/// vectors.
pub fn wedge_norm_sq(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let w = a[i] * b[j] - a[j] * b[i];
            s += w * w;
        }
    }
    s
}

pub fn check_same_dim(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(GeomError::DimensionMismatch { expected: a.len(), got: b.len() });
    }
    Ok(())
}

pub fn c64(p: &[f64]) -> Result<Complex64> {
    if p.len() != 2 {
        return Err(GeomError::DimensionMismatch { expected: 2, got: p.len() });
    }
    Ok(Complex64::new(p[0], p[1]))
}
