//! CSV and SVG rendering of Hilbert circles.

use std::fmt::Write as _;

use hilbert_core::hilbert::Polyline;
use hilbert_core::report::fmt_sig;
use hilbert_core::{Complex64, ConvexDomain};

pub fn polyline_csv(poly: &Polyline) -> String {
    let mut out = String::from("theta,x,y\n");
    for (p, t) in poly.points.iter().zip(&poly.thetas) {
        let _ = writeln!(out, "{},{},{}", fmt_sig(*t), fmt_sig(p.re), fmt_sig(p.im));
    }
    out
}

/// Maps the square `[-scale, scale]²` onto the unit view box, y up.
struct View {
    scale: f64,
}

impl View {
    fn x(&self, z: Complex64) -> f64 {
        0.5 + z.re / (2.0 * self.scale)
    }

    fn y(&self, z: Complex64) -> f64 {
        0.5 - z.im / (2.0 * self.scale)
    }

    fn pt(&self, z: Complex64) -> String {
        format!("{:.6},{:.6}", self.x(z), self.y(z))
    }
}

/// Domain boundary in black, the circle in blue and, for polygons, dashed
/// gray lines through the center and each vertex.
pub fn circle_svg(domain: &ConvexDomain, center: Complex64, poly: &Polyline) -> String {
    let extent = match domain {
        ConvexDomain::Ball(_) => 1.0,
        ConvexDomain::Polygon(p) => p.vertices().iter().map(|v| v.re.abs().max(v.im.abs())).fold(0.0, f64::max),
    };
    let view = View { scale: 1.05 * extent };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1 1" width="600" height="600" data-scale="{:.6}">"#,
        view.scale
    );
    let _ = writeln!(out, r#"<rect x="0" y="0" width="1" height="1" fill="white"/>"#);
    match domain {
        ConvexDomain::Ball(_) => {
            let _ = writeln!(
                out,
                r#"<circle cx="0.500000" cy="0.500000" r="{:.6}" fill="none" stroke="black" stroke-width="0.003"/>"#,
                0.5 / view.scale
            );
        }
        ConvexDomain::Polygon(p) => {
            let pts: Vec<String> = p.vertices().iter().map(|&v| view.pt(v)).collect();
            let _ = writeln!(
                out,
                r#"<polygon points="{}" fill="none" stroke="black" stroke-width="0.003"/>"#,
                pts.join(" ")
            );
            for &v in p.vertices() {
                let d = (center - v) / (center - v).norm();
                let Ok(s) = domain.ray_exit(&[center.re, center.im], &[d.re, d.im]) else { continue };
                let far = center + d * s;
                let _ = writeln!(
                    out,
                    r#"<line x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}" stroke="gray" stroke-width="0.002" stroke-dasharray="0.01,0.01"/>"#,
                    view.x(v),
                    view.y(v),
                    view.x(far),
                    view.y(far)
                );
            }
        }
    }
    let pts: Vec<String> = poly.points.iter().map(|&z| view.pt(z)).collect();
    let _ = writeln!(out, r#"<polygon points="{}" fill="none" stroke="blue" stroke-width="0.003"/>"#, pts.join(" "));
    let _ = writeln!(out, r#"<circle cx="{:.6}" cy="{:.6}" r="0.004" fill="black"/>"#, view.x(center), view.y(center));
    out.push_str("</svg>\n");
    out
}
