//! Strictly convex planar polygons: validation, the text file format,
//! membership with margin and chord endpoints through interior points.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{GeomError, Result, EPS_BND, EPS_DEG};
use crate::geom::cross;

/// A strictly convex polygon with counterclockwise vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Complex64>,
}

/// Which input vertex broke validation; used to attach line numbers.
#[derive(Debug)]
enum Invalid {
    TooFew,
    Repeated(usize),
    NotConvex(usize),
    Winding,
}

fn validate(vertices: &[Complex64]) -> std::result::Result<Vec<usize>, Invalid> {
    let n = vertices.len();
    if n < 3 {
        return Err(Invalid::TooFew);
    }
    for i in 0..n {
        for j in 0..i {
            if (vertices[i] - vertices[j]).norm() < EPS_DEG {
                return Err(Invalid::Repeated(i));
            }
        }
    }
    let area2: f64 = (0..n).map(|i| cross(vertices[i], vertices[(i + 1) % n])).sum();
    let mut order: Vec<usize> = (0..n).collect();
    if area2 < 0.0 {
        order.reverse();
    }
    let mut turning = 0.0;
    for k in 0..n {
        let (p, q, r) = (vertices[order[k]], vertices[order[(k + 1) % n]], vertices[order[(k + 2) % n]]);
        let e1 = q - p;
        let e2 = r - q;
        if cross(e1, e2) / (e1.norm() * e2.norm()) <= EPS_DEG {
            return Err(Invalid::NotConvex(order[(k + 1) % n]));
        }
        turning += (e2 / e1).arg();
    }
    // A star polygon turns left at every vertex but winds more than once.
    if (turning - 2.0 * PI).abs() > 1e-6 {
        return Err(Invalid::Winding);
    }
    Ok(order)
}

impl ConvexPolygon {
    /// Validates and normalizes to counterclockwise order.
    pub fn new(vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(GeomError::InvalidPolygon("non-finite vertex".into()));
        }
        match validate(&vertices) {
            Ok(order) => Ok(Self { vertices: order.into_iter().map(|i| vertices[i]).collect() }),
            Err(Invalid::TooFew) => Err(GeomError::InvalidPolygon("fewer than 3 vertices".into())),
            Err(Invalid::Repeated(i)) => Err(GeomError::InvalidPolygon(format!("vertex {i} repeats an earlier vertex"))),
            Err(Invalid::NotConvex(i)) => Err(GeomError::InvalidPolygon(format!("not strictly convex at vertex {i}"))),
            Err(Invalid::Winding) => Err(GeomError::InvalidPolygon("boundary winds more than once".into())),
        }
    }

    /// Parses the plain-text polygon format: one `x y` vertex per line,
    /// `#` comment lines, blank lines ignored, implicit closure.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = s.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(GeomError::PolygonParse { line, msg: format!("expected two numbers, found {}", fields.len()) });
            }
            let mut xy = [0.0; 2];
            for (slot, f) in xy.iter_mut().zip(&fields) {
                *slot = f
                    .parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| GeomError::PolygonParse { line, msg: format!("invalid number `{f}`") })?;
            }
            vertices.push(Complex64::new(xy[0], xy[1]));
            lines.push(line);
        }
        let last_line = text.lines().count().max(1);
        match validate(&vertices) {
            Ok(order) => Ok(Self { vertices: order.into_iter().map(|i| vertices[i]).collect() }),
            Err(Invalid::TooFew) => Err(GeomError::PolygonParse { line: last_line, msg: "fewer than 3 vertices".into() }),
            Err(Invalid::Repeated(i)) => Err(GeomError::PolygonParse { line: lines[i], msg: "repeated vertex".into() }),
            Err(Invalid::NotConvex(i)) => Err(GeomError::PolygonParse { line: lines[i], msg: "polygon is not strictly convex at this vertex".into() }),
            Err(Invalid::Winding) => Err(GeomError::PolygonParse { line: last_line, msg: "boundary winds more than once".into() }),
        }
    }

    /// Named presets: `square`, `triangle`, `inscribed-square`,
    /// `inscribed-triangle` (alias of `triangle`) and
    /// `sector:<angle-degrees>[:<arc-segments>]`.
    pub fn preset(name: &str) -> Result<Self> {
        let c = Complex64::new;
        match name {
            "square" => Self::new(vec![c(-1.0, -1.0), c(1.0, -1.0), c(1.0, 1.0), c(-1.0, 1.0)]),
            "triangle" | "inscribed-triangle" => Self::regular(3, PI / 2.0),
            "inscribed-square" => Self::regular(4, PI / 4.0),
            s if s.starts_with("sector:") => {
                let parts: Vec<&str> = s["sector:".len()..].split(':').collect();
                let bad = || GeomError::InvalidPolygon(format!("bad sector preset `{s}`"));
                let angle: f64 = parts.first().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
                let segs: usize = match parts.get(1) {
                    Some(p) => p.parse().map_err(|_| bad())?,
                    None => 16,
                };
                if parts.len() > 2 || !(angle > 0.0 && angle < 180.0) || segs == 0 {
                    return Err(bad());
                }
                Self::sector(angle.to_radians(), segs)
            }
            _ => Err(GeomError::InvalidPolygon(format!("unknown preset `{name}`"))),
        }
    }

    /// Regular polygon inscribed in the unit circle.
    pub fn regular(n: usize, phase: f64) -> Result<Self> {
        Self::new((0..n).map(|k| Complex64::from_polar(1.0, phase + 2.0 * PI * k as f64 / n as f64)).collect())
    }

    /// Circular sector with apex at the origin, unit radius, symmetric about
    /// the positive real axis, with the arc replaced by `segments` chords.
    pub fn sector(angle: f64, segments: usize) -> Result<Self> {
        let mut v = vec![Complex64::new(0.0, 0.0)];
        for k in 0..=segments {
            v.push(Complex64::from_polar(1.0, -angle / 2.0 + angle * k as f64 / segments as f64));
        }
        Self::new(v)
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn max_vertex_norm(&self) -> f64 {
        self.vertices.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Signed distance to the boundary, positive inside.
    pub fn signed_distance(&self, x: Complex64) -> f64 {
        let inner = self
            .edges()
            .map(|(p, q)| cross(q - p, x - p) / (q - p).norm())
            .fold(f64::INFINITY, f64::min);
        if inner >= 0.0 {
            return inner;
        }
        let outer = self.edges().map(|(p, q)| point_segment_distance(x, p, q)).fold(f64::INFINITY, f64::min);
        -outer
    }

    pub fn contains(&self, x: Complex64) -> bool {
        self.signed_distance(x) > 0.0
    }

    /// Requires the point to be strictly inside with margin [`EPS_BND`].
    pub fn check_interior(&self, x: Complex64) -> Result<f64> {
        let m = self.signed_distance(x);
        if m <= 0.0 {
            return Err(GeomError::OutsideDomain(m));
        }
        if m < EPS_BND {
            return Err(GeomError::NearBoundary(m));
        }
        Ok(m)
    }

    /// Smallest `t > 0` with `x + t·d` on the boundary, for interior `x`.
    pub fn ray_exit(&self, x: Complex64, d: Complex64) -> Result<f64> {
        if d.norm() < EPS_DEG {
            return Err(GeomError::DegenerateInput("zero ray direction"));
        }
        let mut best = f64::INFINITY;
        for (p, q) in self.edges() {
            let e = q - p;
            let rate = cross(e, d);
            if rate < 0.0 {
                let t = cross(e, x - p) / -rate;
                best = best.min(t);
            }
        }
        if best.is_finite() && best >= 0.0 {
            Ok(best)
        } else {
            Err(GeomError::OutsideDomain(self.signed_distance(x)))
        }
    }

    /// Boundary points `u, v` of the line through `a` and `b`, ordered so
    /// that `u, a, b, v` occur in this order.
    pub fn chord(&self, a: Complex64, b: Complex64) -> Result<(Complex64, Complex64)> {
        self.check_interior(a)?;
        self.check_interior(b)?;
        let d = b - a;
        if d.norm() < EPS_DEG {
            return Err(GeomError::DegenerateInput("chord through coincident points"));
        }
        let tu = self.ray_exit(a, -d)?;
        let tv = self.ray_exit(b, d)?;
        Ok((a - d * tu, b + d * tv))
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(p, q)| (q - p).norm()).sum()
    }

    /// Boundary point at arclength fraction `s` (taken modulo 1).
    pub fn boundary_point(&self, s: f64) -> Complex64 {
        let total = self.perimeter();
        let mut rem = s.rem_euclid(1.0) * total;
        for (p, q) in self.edges() {
            let len = (q - p).norm();
            if rem <= len {
                return p + (q - p) * (rem / len);
            }
            rem -= len;
        }
        self.vertices[0]
    }

    /// Whether `other` lies inside (or on the boundary of) `self`.
    pub fn contains_polygon(&self, other: &ConvexPolygon) -> bool {
        other.vertices.iter().all(|&z| self.signed_distance(z) >= -EPS_DEG)
    }
}

pub(crate) fn point_segment_distance(x: Complex64, p: Complex64, q: Complex64) -> f64 {
    let e = q - p;
    let s = ((x - p) * e.conj()).re / e.norm_sqr();
    (x - (p + e * s.clamp(0.0, 1.0))).norm()
}
