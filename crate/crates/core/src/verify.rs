//! Sampled verification suites for the identities and inequalities the
//! library implements. Each suite returns a [`MetricReport`] of worst-case
//! margins.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{GeomError, Result};
use crate::geom::{circle_through, cross, cross_ratio_c, dist_origin_line, lis, lis_unit_circle};
use crate::hilbert::{
    h_ball, h_chord, hexagon_fit_residual, hilbert_ball_boundary, hilbert_midpoint, hilbert_sphere_ellipsoid,
    little_thm_chord_points, little_thm_v, midpoint_configuration, my210_margin, nsc_residual,
    parallel_projection_closed_form, projection_pair, tangency_points, tangency_points_via_center, ConvexDomain,
};
use crate::holder::{holder_verify, QcMapSpec};
use crate::hyperbolic::{hyp_midpoint, lem_fuji_check, rho_ball, rho_disk};
use crate::polygon::ConvexPolygon;
use crate::related::{apollonian, bthm_margin_disk, mobius_delta, mobius_delta_sampled};
use crate::report::MetricReport;
use crate::sample::{self, SampleRng, SAMPLE_RADIUS};
use crate::special::{bound_u, bound_v, c_bounds, c_of_k, mu, phi_k, phi_k_via_gamma, phi_pair};
use crate::vecn;

/// Sample size and seed shared by all suites; `samples = None` uses each
/// suite's default.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub samples: Option<u64>,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { samples: None, seed: sample::DEFAULT_SEED }
    }
}

impl SuiteConfig {
    fn n(&self, default: u64) -> u64 {
        self.samples.unwrap_or(default).max(1)
    }
}

type SuiteFn = fn(&SuiteConfig) -> Result<MetricReport>;

/// A named verification suite.
pub struct Suite {
    pub name: &'static str,
    pub summary: &'static str,
    pub run: SuiteFn,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "functional-identity", summary: "sh(h/2) = √(1−m²)·sh(ρ/2) in the disk", run: functional_identity },
    Suite { name: "metric-sandwich", summary: "h ≤ ρ ≤ h/√(1−m²), equality on diameters", run: metric_sandwich },
    Suite { name: "lower-bounds", summary: "th(ρ/4) ≥ th(h/4) ≥ |a−b|/√(4−|a+b|²)", run: lower_bounds },
    Suite { name: "ratio-monotonicity", summary: "2·arsh(c·sh(t/2))/(ct) is monotone in t", run: ratio_monotonicity },
    Suite { name: "unit-disk-bound", summary: "2·th(h_D/4) ≥ |a−b| for D in the unit disk", run: unit_disk_bound },
    Suite { name: "ellipsoid-spheres", summary: "Hilbert spheres of the ball are ellipsoids", run: ellipsoid_spheres },
    Suite { name: "midpoints", summary: "hyperbolic and Hilbert midpoint constructions", run: midpoints },
    Suite { name: "tangency", summary: "circles through a, b tangent to the unit circle", run: tangency },
    Suite { name: "cross-ratio-projection", summary: "projection of arcs onto chords keeps cross-ratios", run: cross_ratio_projection },
    Suite { name: "special-functions", summary: "μ, φ_K and the bounds on c(K)", run: special_functions },
    Suite { name: "holder-bound", summary: "Hölder bound for the catalog of disk maps", run: holder_bound },
    Suite { name: "hilbert-circles", summary: "Hilbert circles in the disk and in a triangle", run: hilbert_circles },
    Suite { name: "apollonian-mobius", summary: "α, δ, ρ relations on the disk and polygons", run: apollonian_mobius },
    Suite { name: "disk-comparison", summary: "α/2 ≤ ρ ≤ 4·sh(α/2) on the disk", run: disk_comparison },
    Suite { name: "oracle-equivalence", summary: "independent evaluation paths agree", run: oracle_equivalence },
];

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

/// Running maximum of a residual.
#[derive(Default)]
struct Worst(f64);

impl Worst {
    fn push(&mut self, x: f64) {
        if x.is_nan() {
            self.0 = f64::INFINITY;
        } else {
            self.0 = self.0.max(x);
        }
    }
}

/// Running minimum of a margin.
struct Least(f64);

impl Default for Least {
    fn default() -> Self {
        Self(f64::INFINITY)
    }
}

impl Least {
    fn push(&mut self, x: f64) {
        if x.is_nan() {
            self.0 = f64::NEG_INFINITY;
        } else {
            self.0 = self.0.min(x);
        }
    }
}

fn disk_pair(rng: &mut SampleRng) -> (Complex64, Complex64) {
    loop {
        let a = sample::point_in_disk(rng, SAMPLE_RADIUS);
        let b = sample::point_in_disk(rng, SAMPLE_RADIUS);
        if (a - b).norm() > 1e-6 {
            return (a, b);
        }
    }
}

fn xy(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn e(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, t)
}

fn uniform(rng: &mut SampleRng, lo: f64, hi: f64) -> f64 {
    use rand::Rng;
    rng.gen_range(lo..hi)
}

fn report(count: u64, seed: u64) -> MetricReport {
    let mut r = MetricReport::new();
    r.count = Some(count);
    r.seed = Some(seed);
    r
}

fn functional_identity(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(10_000);
    let mut rng = sample::stream(cfg.seed, 1);
    let mut worst = Worst::default();
    for _ in 0..n {
        let (a, b) = disk_pair(&mut rng);
        let (a, b) = (xy(a), xy(b));
        let h = h_ball(&a, &b)?;
        let rho = rho_ball(&a, &b)?;
        let m = dist_origin_line(&a, &b)?;
        worst.push(((h / 2.0).sinh() - ((1.0 - m) * (1.0 + m)).sqrt() * (rho / 2.0).sinh()).abs());
    }
    let mut r = report(n, cfg.seed);
    r.residual("identity", worst.0, 1e-9);
    Ok(r)
}

fn metric_sandwich(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(10_000);
    let mut rng = sample::stream(cfg.seed, 2);
    let (mut lower, mut upper) = (Least::default(), Least::default());
    for _ in 0..n {
        let (a, b) = disk_pair(&mut rng);
        let (a, b) = (xy(a), xy(b));
        let h = h_ball(&a, &b)?;
        let rho = rho_ball(&a, &b)?;
        let m = dist_origin_line(&a, &b)?;
        lower.push(rho - h);
        upper.push(h / ((1.0 - m) * (1.0 + m)).sqrt() - rho);
    }
    let mut eq = Worst::default();
    for _ in 0..n.min(1000) {
        let t = sample::angle(&mut rng);
        let s1 = uniform(&mut rng, -SAMPLE_RADIUS, SAMPLE_RADIUS);
        let s2 = uniform(&mut rng, -SAMPLE_RADIUS, SAMPLE_RADIUS);
        let (a, b) = (xy(e(t) * s1), xy(e(t) * s2));
        eq.push((h_ball(&a, &b)? - rho_ball(&a, &b)?).abs());
    }
    let mut r = report(n, cfg.seed);
    r.margin_with_slack("h_le_rho", lower.0, 1e-12)
        .margin_with_slack("rho_le_h_over_sqrt", upper.0, 1e-12)
        .residual("diameter_equality", eq.0, 1e-10);
    Ok(r)
}

fn lower_bounds(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(10_000);
    let mut rng = sample::stream(cfg.seed, 3);
    let (mut first, mut second) = (Least::default(), Least::default());
    let mut eq = Worst::default();
    for dim in [2, 3] {
        for _ in 0..n {
            let a = sample::point_in_ball(&mut rng, dim, SAMPLE_RADIUS);
            let b = sample::point_in_ball(&mut rng, dim, SAMPLE_RADIUS);
            let h = h_ball(&a, &b)?;
            let rho = rho_ball(&a, &b)?;
            let bound = vecn::dist(&a, &b) / (4.0 - vecn::norm_sq(&vecn::add(&a, &b))).sqrt();
            first.push((rho / 4.0).tanh() - (h / 4.0).tanh());
            second.push((h / 4.0).tanh() - bound);
            let mb = vecn::scale(&a, -1.0);
            let bound = vecn::dist(&a, &mb) / 2.0;
            eq.push(((h_ball(&a, &mb)? / 4.0).tanh() - bound).abs());
        }
    }
    let mut r = report(2 * n, cfg.seed);
    r.margin_with_slack("th_rho_ge_th_h", first.0, 1e-12)
        .margin_with_slack("th_h_ge_bound", second.0, 1e-12)
        .residual("antipodal_equality", eq.0, 1e-12);
    Ok(r)
}

fn ratio_monotonicity(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(200);
    let mut rng = sample::stream(cfg.seed, 4);
    let (mut mono, mut range) = (Least::default(), Least::default());
    for _ in 0..n {
        let c = if uniform(&mut rng, 0.0, 1.0) < 0.5 { uniform(&mut rng, 0.05, 0.95) } else { uniform(&mut rng, 1.05, 5.0) };
        let sign = if c < 1.0 { 1.0 } else { -1.0 };
        let (lo, hi) = if c < 1.0 { (1.0, 1.0 / c) } else { (1.0 / c, 1.0) };
        let mut prev = None::<f64>;
        for k in 1..=100 {
            let t = 0.05 * k as f64;
            let q = 2.0 * (c * (t / 2.0).sinh()).asinh() / (c * t);
            if let Some(p) = prev {
                mono.push(sign * (q - p));
            }
            range.push((q - lo).min(hi - q));
            prev = Some(q);
        }
    }
    let mut r = report(n, cfg.seed);
    r.margin_with_slack("monotone", mono.0, 1e-12).margin_with_slack("in_range", range.0, 1e-12);
    Ok(r)
}

fn unit_disk_bound(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(2_000);
    let mut rng = sample::stream(cfg.seed, 5);
    let domains = [
        ("disk", ConvexDomain::Ball(2)),
        ("triangle", ConvexDomain::Polygon(ConvexPolygon::preset("inscribed-triangle")?)),
        ("square", ConvexDomain::Polygon(ConvexPolygon::preset("inscribed-square")?)),
    ];
    let mut r = report(3 * n, cfg.seed);
    for (name, d) in &domains {
        let mut least = Least::default();
        for _ in 0..n {
            let (a, b) = match d {
                ConvexDomain::Polygon(p) => {
                    (sample::point_in_polygon(&mut rng, p, 1e-6), sample::point_in_polygon(&mut rng, p, 1e-6))
                }
                ConvexDomain::Ball(_) => disk_pair(&mut rng),
            };
            least.push(my210_margin(d, &xy(a), &xy(b))?);
        }
        r.margin_with_slack(&format!("{name}_margin"), least.0, 1e-12);
    }
    let mut eq = Worst::default();
    for _ in 0..n.min(1000) {
        let a = sample::point_in_disk(&mut rng, SAMPLE_RADIUS);
        if a.norm() > 1e-6 {
            eq.push(my210_margin(&domains[0].1, &xy(a), &xy(-a))?.abs());
        }
    }
    r.residual("antipodal_equality", eq.0, 1e-12);
    Ok(r)
}

fn ellipsoid_spheres(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(30);
    let mut rng = sample::stream(cfg.seed, 6);
    let (mut dist, mut nsc, mut inside) = (Worst::default(), Worst::default(), Least::default());
    for dim in [2, 3, 5] {
        for _ in 0..n {
            let c = sample::point_in_ball(&mut rng, dim, 0.95);
            let radius = uniform(&mut rng, 0.05, 3.0);
            let ell = hilbert_sphere_ellipsoid(&c, radius)?;
            for _ in 0..200 {
                let x = ell.surface_point(&sample::unit_vector(&mut rng, dim));
                inside.push(1.0 - vecn::norm(&x));
                dist.push((h_ball(&x, &c)? - radius).abs());
                nsc.push(nsc_residual(&c, radius, &x).abs());
            }
        }
    }
    let mut centered = Worst::default();
    for _ in 0..n {
        let radius = uniform(&mut rng, 0.05, 5.0);
        let ell = hilbert_sphere_ellipsoid(&[0.0, 0.0, 0.0], radius)?;
        let k = (radius / 2.0).tanh();
        centered.push((ell.a_min - k).abs().max((ell.a_max - k).abs()).max(vecn::norm(&ell.center)));
    }
    let mut r = report(3 * n, cfg.seed);
    r.residual("distance", dist.0, 1e-9)
        .residual("nsc", nsc.0, 1e-10)
        .margin("inside_ball", inside.0)
        .residual("centered_radius", centered.0, 1e-12);
    Ok(r)
}

/// `u, c, d, v, w` in circular order with `L[u,v] ∥ L[c,d]`.
pub fn parallel_quintuple(rng: &mut SampleRng) -> [Complex64; 5] {
    let phi = sample::angle(rng);
    let big = uniform(rng, 0.2, PI - 0.2);
    let small = uniform(rng, 0.05, big.min(PI / 2.0) - 0.05);
    let span = 2.0 * PI - 2.0 * big;
    let w = phi + big + uniform(rng, 0.1, 0.9) * span;
    [e(phi - big), e(phi - small), e(phi + small), e(phi + big), e(w)]
}

fn midpoints(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(1_000);
    let mut rng = sample::stream(cfg.seed, 7);
    let (mut hyp, mut hil, mut hil_rho, mut fuji) = (Worst::default(), Worst::default(), Worst::default(), Least::default());
    let disk = ConvexDomain::Ball(2);
    for _ in 0..n {
        let (a, b) = disk_pair(&mut rng);
        let m = hyp_midpoint(a, b)?;
        let half = rho_disk(a, b)? / 2.0;
        hyp.push((rho_disk(a, m)? - half).abs().max((rho_disk(m, b)? - half).abs()));
        if let Ok(rep) = lem_fuji_check(a, b) {
            fuji.push(rep.min_margin());
        }
        let [u, c, d, v, w] = parallel_quintuple(&mut rng);
        let conf = midpoint_configuration(u, c, d, v, w)?;
        let (pa, pb, pp) = (xy(conf.a), xy(conf.b), xy(conf.p));
        hil.push((h_ball(&pa, &pp)? - h_ball(&pp, &pb)?).abs());
        hil_rho.push((rho_ball(&pa, &pp)? - rho_ball(&pp, &pb)?).abs());
        let q = hilbert_midpoint(&disk, &pa, &pb)?;
        hil.push(vecn::dist(&q, &pp));
    }
    let mut r = report(n, cfg.seed);
    r.residual("hyperbolic_midpoint", hyp.0, 1e-9)
        .residual("hilbert_midpoint_h", hil.0, 1e-9)
        .residual("hilbert_midpoint_rho", hil_rho.0, 1e-9)
        .margin("tangent_construction", fuji.0);
    Ok(r)
}

fn tangency(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(10_000);
    let mut rng = sample::stream(cfg.seed, 8);
    let (mut on_circle, mut tangent, mut agree) = (Worst::default(), Worst::default(), Worst::default());
    let mut opposite = Least::default();
    for _ in 0..n {
        let (a, b) = disk_pair(&mut rng);
        let (w1, w2) = tangency_points(a, b)?;
        let mut sides = [0.0; 2];
        for (k, w) in [w1, w2].into_iter().enumerate() {
            on_circle.push((w.norm() - 1.0).abs());
            let circle = circle_through(a, b, w)?;
            tangent.push((circle.center.norm() + circle.radius - 1.0).abs());
            sides[k] = cross(b - a, w - a);
        }
        opposite.push(if sides[0] * sides[1] < 0.0 { 0.0 } else { -1.0 });
        if (a.norm_sqr() - b.norm_sqr()).abs() > 1e-3 {
            let (v1, v2, _) = tangency_points_via_center(a, b)?;
            agree.push((v1 - w1).norm().max((v2 - w2).norm()));
        }
    }
    let mut r = report(n, cfg.seed);
    r.residual("unit_modulus", on_circle.0, 1e-10)
        .residual("tangent_circle", tangent.0, 1e-9)
        .margin("opposite_sides", opposite.0)
        .residual("center_formula", agree.0, 1e-10);
    Ok(r)
}

/// `a, b, c, d` in circular order with `L[a,b] ∥ L[c,d]`, and `u` on the arc
/// from `a` to `b` away from `c, d`.
pub fn parallel_quadruple(rng: &mut SampleRng) -> ([Complex64; 4], Complex64) {
    let psi = sample::angle(rng);
    // Below a half-arc of 0.3 the line intersection for v loses digits.
    let big = uniform(rng, 0.3, PI - 0.3);
    // Half-arc of [c, d] below π/2, so (c+d)/|c+d| is its midpoint.
    let small = uniform(rng, 0.1, (PI - big - 0.1).min(0.5 * PI - 0.05));
    let u = e(psi + uniform(rng, -0.9, 0.9) * big);
    ([e(psi - big), e(psi + big), e(psi + PI - small), e(psi + PI + small)], u)
}

/// Shortest of the arcs between consecutive sorted angles.
fn min_arc(t: &[f64]) -> f64 {
    let wrap = 2.0 * PI - t[t.len() - 1] + t[0];
    t.windows(2).map(|w| w[1] - w[0]).fold(wrap, f64::min)
}

fn cross_ratio_projection(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(1_000);
    let mut rng = sample::stream(cfg.seed, 9);
    let (mut var, mut eq, mut v_mod, mut closed) = (Worst::default(), Worst::default(), Worst::default(), Worst::default());
    let (mut indep, mut par) = (Worst::default(), Worst::default());
    for _ in 0..n {
        // Lemma-style quintuple u, c, d, v and twenty w on the remaining arc.
        let t = sample::sorted_angles(&mut rng, 4);
        let [u, c, d, v] = [e(t[0]), e(t[1]), e(t[2]), e(t[3])];
        if min_arc(&t) < 1e-2 {
            continue;
        }
        let target = cross_ratio_c(u, c, d, v)?;
        let vals: Vec<f64> = (0..20)
            .map(|k| {
                let s = (k as f64 + 0.5) / 20.0;
                let w = e(t[3] + s * (2.0 * PI - t[3] + t[0]));
                let (a, b) = projection_pair(u, c, d, v, w)?;
                cross_ratio_c(u, a, b, v)
            })
            .collect::<Result<_>>()?;
        let mean = vals.iter().sum::<f64>() / vals.len() as f64;
        var.push(vals.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / vals.len() as f64);
        eq.push((mean - target).abs() / target);

        // The same four points read as a, b, c, d, with u between a and b.
        let [a, b, c, d] = [e(t[0]), e(t[1]), e(t[2]), e(t[3])];
        // Arcs shorter than 0.3 push a₂, b₂ against the circle and leave
        // too few digits in h(a₂,b₂) and v.
        if min_arc(&t) >= 0.3 {
            let want = ((a - c) * (b - d) / ((a - d) * (b - c))).norm();
            for k in 0..5 {
                let uu = e(t[0] + (k as f64 + 0.5) / 5.0 * (t[1] - t[0]));
                let (a2, b2) = little_thm_chord_points(a, b, c, d, uu)?;
                indep.push((h_ball(&xy(a2), &xy(b2))?.exp() - want).abs() / want);
            }
            let uu = e(0.5 * (t[0] + t[1]));
            let p = a + (b - a) * uniform(&mut rng, 0.05, 0.95);
            v_mod.push((little_thm_v(a, b, c, d, uu, p)?.norm() - 1.0).abs());
        }

        // Parallel configurations.
        let [u, c, d, v, w] = parallel_quintuple(&mut rng);
        let (a1, b1) = projection_pair(u, c, d, v, w)?;
        let (a2, b2) = parallel_projection_closed_form(u, c, d, v, w)?;
        closed.push((a1 - a2).norm().max((b1 - b2).norm()));
        let ([a, b, c, d], uu) = parallel_quadruple(&mut rng);
        let (a2, b2) = little_thm_chord_points(a, b, c, d, uu)?;
        let x = h_ball(&xy(a2), &xy(b2))?.exp();
        let want = ((a - c) / (a - d)).norm_sqr();
        par.push((x - want).abs() / want);
        let p = hilbert_midpoint(&ConvexDomain::Ball(2), &xy(a2), &xy(b2))?;
        let vv = little_thm_v(a, b, c, d, uu, Complex64::new(p[0], p[1]))?;
        closed.push((vv - (c + d) / (c + d).norm()).norm());
    }
    let mut r = report(n, cfg.seed);
    r.residual("variance_over_w", var.0, 1e-18)
        .residual("projected_cross_ratio", eq.0, 1e-10)
        .residual("independent_of_u", indep.0, 1e-9)
        .residual("v_on_circle", v_mod.0, 1e-9)
        .residual("parallel_closed_forms", closed.0, 1e-10)
        .residual("parallel_square_ratio", par.0, 1e-9);
    Ok(r)
}

fn special_functions(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(200);
    let mut rng = sample::stream(cfg.seed, 10);
    let (mut id, mut paths, mut comp) = (Worst::default(), Worst::default(), Worst::default());
    let mut mono = Least::default();
    for _ in 0..n {
        let r = uniform(&mut rng, 1e-3, 1.0 - 1e-3);
        let k = uniform(&mut rng, 1.0, 5.0);
        id.push((phi_k(1.0, r)? - r).abs());
        let p = phi_k(k, r)?;
        paths.push((p - phi_k_via_gamma(k, r)?).abs());
        // Round trip on the pair (φ, φ′); φ alone rounds to 1 too early.
        let (q, qp) = phi_pair(k, r, (1.0 - r * r).sqrt());
        comp.push((phi_pair(1.0 / k, q, qp).0 - r).abs());
        let r2 = (r + 1e-3).min(1.0 - 1e-4);
        mono.push(mu(r)? - mu(r2)?);
        mono.push(phi_k(k, r2)? - p);
    }
    let mut chain = Least::default();
    for k in [1.0, 1.5, 2.0, 3.0, 5.0] {
        chain.push(c_bounds(k)?.min_gap());
    }
    let mut r = report(n, cfg.seed);
    r.metric("u", bound_u())
        .metric("v", bound_v())
        .residual("mu_self_complementary", (mu(std::f64::consts::FRAC_1_SQRT_2)? - PI / 2.0).abs(), 1e-12)
        .residual("phi_one_identity", id.0, 1e-12)
        .residual("phi_paths_agree", paths.0, 1e-10)
        .residual("phi_inverse", comp.0, 1e-10)
        .margin("monotone", mono.0)
        .residual("c_one", (c_of_k(1.0)? - 1.0).abs(), 1e-12)
        .margin_with_slack("bounds_chain", chain.0, 1e-12)
        .margin("u_above", bound_u() - 1.5412)
        .margin("v_below", 1.3507 - bound_v());
    Ok(r)
}

/// The map catalog used by the Hölder verification.
pub fn holder_catalog() -> Vec<(QcMapSpec, f64)> {
    vec![
        (QcMapSpec::Identity, 1.0),
        (QcMapSpec::Mobius(Complex64::new(0.5, 0.0)), 1.0),
        (QcMapSpec::Mobius(Complex64::new(-0.3, 0.6)), 1.0),
        (QcMapSpec::Mobius(Complex64::new(0.05, -0.9)), 1.0),
        (QcMapSpec::Power(2), 1.0),
        (QcMapSpec::Power(3), 1.0),
        (QcMapSpec::RadialStretch(1.5), 1.5),
        (QcMapSpec::RadialStretch(2.0), 2.0),
    ]
}

fn holder_bound(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(2_000);
    let mut r = report(n, cfg.seed);
    for (i, (spec, k)) in holder_catalog().into_iter().enumerate() {
        let rep = holder_verify(&spec, k, n, cfg.seed.wrapping_add(i as u64))?;
        let key = spec.to_string().replace([':', ','], "_");
        r.margin_with_slack(&key, rep.margins["holder"], crate::holder::HOLDER_SLACK);
        r.metric(&format!("{key}.halved_bound_failures"), rep.metrics["halved_bound_failures"]);
    }
    Ok(r)
}

fn hilbert_circles(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(1_000);
    let mut rng = sample::stream(cfg.seed, 11);
    let disk = ConvexDomain::Ball(2);
    let mut round = Worst::default();
    for _ in 0..5 {
        let t = uniform(&mut rng, 0.1, 4.0);
        let poly = hilbert_ball_boundary(&disk, &[0.0, 0.0], t, 90)?;
        let want = (t / 2.0).tanh();
        for p in &poly.points {
            round.push((p.norm() - want).abs());
        }
    }
    let tri = ConvexDomain::Polygon(ConvexPolygon::preset("triangle")?);
    let (z, t) = ([0.12, -0.07], 0.9);
    let circle = hilbert_ball_boundary(&tri, &z, t, 720)?;
    let fit = hexagon_fit_residual(&tri, &z, t, &circle)?;
    let outer = ConvexPolygon::preset("square")?;
    let inner = ConvexPolygon::regular(6, 0.3)?;
    let (d_out, d_in) = (ConvexDomain::Polygon(outer), ConvexDomain::Polygon(inner.clone()));
    let mut nested = Least::default();
    for _ in 0..n {
        let a = sample::point_in_polygon(&mut rng, &inner, 1e-6);
        let b = sample::point_in_polygon(&mut rng, &inner, 1e-6);
        nested.push(h_chord(&d_in, &xy(a), &xy(b))? - h_chord(&d_out, &xy(a), &xy(b))?);
    }
    let mut r = report(n, cfg.seed);
    r.residual("disk_radius", round.0, 1e-9)
        .margin("triangle_convex", if circle.is_convex() { 0.0 } else { -1.0 })
        .residual("hexagon_fit", fit, 1e-3)
        .margin_with_slack("domain_monotonicity", nested.0, 1e-12);
    Ok(r)
}

fn apollonian_mobius(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(20);
    let mut rng = sample::stream(cfg.seed, 12);
    let disk = ConvexDomain::Ball(2);
    let (mut disk_eq, mut h_le) = (Worst::default(), Least::default());
    let (mut lower, mut upper) = (Least::default(), Least::default());
    let square = ConvexDomain::Polygon(ConvexPolygon::preset("square")?);
    let ConvexDomain::Polygon(sq) = &square else { unreachable!() };
    for _ in 0..n {
        let a = sample::point_in_disk(&mut rng, 0.9);
        let b = sample::point_in_disk(&mut rng, 0.9);
        let (a, b) = (xy(a), xy(b));
        let rho = rho_ball(&a, &b)?;
        let alpha = apollonian(&disk, &a, &b)?;
        let delta = mobius_delta_sampled(&disk, &a, &b, 10_000)?.value;
        disk_eq.push((alpha - rho).abs().max((delta - rho).abs()));
        h_le.push(alpha - h_ball(&a, &b)?);
        let a = xy(sample::point_in_polygon(&mut rng, sq, 0.05));
        let b = xy(sample::point_in_polygon(&mut rng, sq, 0.05));
        let alpha = apollonian(&square, &a, &b)?;
        let delta = mobius_delta(&square, &a, &b, 10_000)?.value;
        h_le.push(alpha - h_chord(&square, &a, &b)?);
        lower.push(delta - alpha);
        upper.push((alpha.exp() + 2.0).ln() - delta);
    }
    let mut r = report(n, cfg.seed);
    r.residual("disk_alpha_delta_rho", disk_eq.0, 1e-6)
        .margin_with_slack("h_le_alpha", h_le.0, 1e-12)
        .margin_with_slack("alpha_le_delta", lower.0, 1e-4)
        .margin_with_slack("delta_le_log_bound", upper.0, 1e-4);
    Ok(r)
}

fn disk_comparison(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(10_000);
    let mut rng = sample::stream(cfg.seed, 13);
    let mut least = Least::default();
    for _ in 0..n {
        let (a, b) = disk_pair(&mut rng);
        least.push(bthm_margin_disk(a, b)?.min_margin());
    }
    let mut r = report(n, cfg.seed);
    r.margin_with_slack("both_sides", least.0, 1e-12);
    Ok(r)
}

fn oracle_equivalence(cfg: &SuiteConfig) -> Result<MetricReport> {
    let n = cfg.n(10_000);
    let mut rng = sample::stream(cfg.seed, 14);
    let disk = ConvexDomain::Ball(2);
    let (mut chord, mut lines, mut phis) = (Worst::default(), Worst::default(), Worst::default());
    for _ in 0..n {
        let (a, b) = disk_pair(&mut rng);
        let (a, b) = (xy(a), xy(b));
        chord.push((h_chord(&disk, &a, &b)? - h_ball(&a, &b)?).abs());
        let t = sample::sorted_angles(&mut rng, 4);
        let [p, q, s, w] = [e(t[0]), e(t[2]), e(t[1]), e(t[3])];
        if let (Ok(x), Ok(y)) = (lis_unit_circle(p, q, s, w), lis(p, q, s, w)) {
            lines.push((x - y).norm());
        }
    }
    for _ in 0..n.min(200) {
        let r = uniform(&mut rng, 1e-3, 1.0 - 1e-3);
        let k = uniform(&mut rng, 1.0, 5.0);
        phis.push((phi_k(k, r)? - phi_k_via_gamma(k, r)?).abs());
    }
    let mut r = report(n, cfg.seed);
    r.residual("h_chord_vs_closed_form", chord.0, 1e-9)
        .residual("lis_unit_circle_vs_lis", lines.0, 1e-10)
        .residual("phi_mu_vs_gamma", phis.0, 1e-10);
    Ok(r)
}

/// Outcome of one suite.
pub struct SuiteOutcome {
    pub name: &'static str,
    pub report: std::result::Result<MetricReport, GeomError>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        matches!(&self.report, Ok(r) if r.all_pass())
    }
}

pub fn run_suites(names: &[&str], cfg: &SuiteConfig) -> Result<Vec<SuiteOutcome>> {
    let selected: Vec<&Suite> = if names.is_empty() {
        SUITES.iter().collect()
    } else {
        names
            .iter()
            .map(|n| find_suite(n).ok_or_else(|| GeomError::OutOfDomain(format!("unknown suite `{n}`"))))
            .collect::<Result<_>>()?
    };
    Ok(selected.into_iter().map(|s| SuiteOutcome { name: s.name, report: (s.run)(cfg) }).collect())
}
