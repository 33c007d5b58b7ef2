//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Reference values come from oracles written here, independent of the
//! library code paths wherever one exists.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::process::ExitCode;
use std::time::Instant;

use hilbert_core::geom::{circle_through, cross, cross_ratio_c, dist_origin_line, lis, lis_unit_circle};
use hilbert_core::hilbert::{
    h_ball, h_chord, hexagon_fit_residual, hilbert_ball_boundary, hilbert_midpoint, hilbert_sphere_ellipsoid,
    little_thm_chord_points, little_thm_v, midpoint_configuration, my210_margin, nsc_residual,
    parallel_projection_closed_form, projection_pair, tangency_points, tangency_points_via_center,
};
use hilbert_core::holder::{holder_rhs, holder_verify, qc_map_eval, HolderBoundInput};
use hilbert_core::hyperbolic::{hyp_midpoint, lem_fuji_check, rho_ball};
use hilbert_core::related::{apollonian, mobius_delta, mobius_delta_sampled};
use hilbert_core::sample::{self, SampleRng, SAMPLE_RADIUS};
use hilbert_core::special::{bound_u, bound_v, c_bounds, c_of_k, ell_k, mu, phi_k, phi_k_via_gamma};
use hilbert_core::verify::holder_catalog;
use hilbert_core::{vecn, Complex64, ConvexDomain, ConvexPolygon};
use rand::Rng;

const SEED: u64 = 0x5eed_2024;

type Outcome = Result<String, String>;

fn e(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, t)
}

fn xy(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
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

fn check(ok: bool, what: &str, detail: String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(format!("{what}: {detail}"))
    }
}

fn lib<T>(r: hilbert_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ---- oracles ----

/// Hilbert distance of the unit ball from the chord endpoints, found as the
/// roots of `|a + s·d|² = 1`.
fn h_ball_oracle(a: &[f64], b: &[f64]) -> f64 {
    let d: Vec<f64> = b.iter().zip(a).map(|(x, y)| x - y).collect();
    let len = vecn::norm(&d);
    if len == 0.0 {
        return 0.0;
    }
    let d: Vec<f64> = d.iter().map(|x| x / len).collect();
    let p = vecn::dot(a, &d);
    let q = vecn::norm_sq(a) - 1.0;
    let disc = (p * p - q).sqrt();
    // Roots s₋ < 0 < s₊; b sits at s = len.
    let s_plus = -p + disc;
    let s_minus = -p - disc;
    ((len - s_minus) * s_plus / (-s_minus * (s_plus - len))).ln()
}

/// Hyperbolic distance of the unit ball, `2·arsh(|a−b|/√((1−|a|²)(1−|b|²)))`.
fn rho_oracle(a: &[f64], b: &[f64]) -> f64 {
    let t = vecn::dist(a, b) / ((1.0 - vecn::norm_sq(a)) * (1.0 - vecn::norm_sq(b))).sqrt();
    2.0 * t.asinh()
}

/// Chord of a convex polygon through `a` in direction `b − a`, by clipping
/// the line against every edge.
fn polygon_h_oracle(poly: &ConvexPolygon, a: Complex64, b: Complex64) -> f64 {
    let d = b - a;
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for (p, q) in poly.edges() {
        // Inside is to the left of p→q: cross(q−p, x−p) ≥ 0.
        let e = q - p;
        let c0 = cross(e, a - p);
        let c1 = cross(e, d);
        if c1 > 0.0 {
            lo = lo.max(-c0 / c1);
        } else if c1 < 0.0 {
            hi = hi.min(-c0 / c1);
        }
    }
    // a at 0, b at 1, the boundary at lo < 0 and hi > 1.
    ((1.0 - lo) * hi / (-lo * (hi - 1.0))).ln()
}

/// Uniform parametrization of the boundary by arc length, vertices included.
fn polygon_boundary_grid(poly: &ConvexPolygon, n: usize) -> Vec<Complex64> {
    let vs = poly.vertices();
    let lens: Vec<f64> = (0..vs.len()).map(|i| (vs[(i + 1) % vs.len()] - vs[i]).norm()).collect();
    let total: f64 = lens.iter().sum();
    let mut pts = Vec::with_capacity(n + vs.len());
    pts.extend_from_slice(vs);
    for (i, &l) in lens.iter().enumerate() {
        let m = ((l / total) * n as f64).ceil() as usize;
        let (p, q) = (vs[i], vs[(i + 1) % vs.len()]);
        pts.extend((1..m).map(|k| p + (q - p) * (k as f64 / m as f64)));
    }
    pts
}

/// Apollonian metric by brute force over boundary samples.
fn alpha_oracle(grid: &[Complex64], a: Complex64, b: Complex64) -> f64 {
    let f = |x: &Complex64| (*x - b).norm() / (*x - a).norm();
    let up = grid.iter().map(f).fold(0.0, f64::max);
    let down = grid.iter().map(|x| 1.0 / f(x)).fold(0.0, f64::max);
    (up * down).ln()
}

/// `𝒦(r)` by the trapezoid rule on a full period, which converges
/// geometrically for this analytic periodic integrand.
fn ell_k_oracle(r: f64) -> f64 {
    let n = 4096;
    let h = 2.0 * PI / n as f64;
    let s: f64 = (0..n).map(|k| 1.0 / (1.0 - (r * (k as f64 * h).sin()).powi(2)).sqrt()).sum();
    s * h / 4.0
}

/// Line intersection by Cramer's rule on the real 2×2 system.
fn lis_oracle(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let (u, v) = (b - a, d - c);
    let det = u.re * (-v.im) - u.im * (-v.re);
    let r = c - a;
    let s = (r.re * (-v.im) - r.im * (-v.re)) / det;
    a + u * s
}

// ---- criteria ----

fn functional_identity() -> Outcome {
    let start = Instant::now();
    let mut rng = sample::stream(SEED, 1);
    let (mut worst, mut oracle) = (0.0f64, 0.0f64);
    for _ in 0..100_000 {
        let (a, b) = disk_pair(&mut rng);
        let (a, b) = (xy(a), xy(b));
        let h = lib(h_ball(&a, &b))?;
        let rho = lib(rho_ball(&a, &b))?;
        let m = lib(dist_origin_line(&a, &b))?;
        worst = worst.max(((h / 2.0).sinh() - (1.0 - m * m).sqrt() * (rho / 2.0).sinh()).abs());
        oracle = oracle.max((h - h_ball_oracle(&a, &b)).abs() / h.max(1.0));
        oracle = oracle.max((rho - rho_oracle(&a, &b)).abs() / rho.max(1.0));
    }
    let secs = start.elapsed().as_secs_f64();
    check(worst < 1e-9, "identity residual", format!("{worst:e}"))?;
    check(oracle < 1e-9, "oracle mismatch", format!("{oracle:e}"))?;
    check(secs < 5.0, "runtime", format!("{secs:.2} s"))?;
    Ok(format!("max residual {worst:.3e}, {secs:.2} s"))
}

fn metric_sandwich() -> Outcome {
    let mut rng = sample::stream(SEED, 1);
    let (mut lower, mut upper) = (f64::INFINITY, f64::INFINITY);
    for _ in 0..100_000 {
        let (a, b) = disk_pair(&mut rng);
        let (a, b) = (xy(a), xy(b));
        let h = h_ball_oracle(&a, &b);
        let rho = lib(rho_ball(&a, &b))?;
        let m = lib(dist_origin_line(&a, &b))?;
        lower = lower.min(rho - lib(h_ball(&a, &b))?).min(rho - h);
        upper = upper.min(h / (1.0 - m * m).sqrt() - rho);
    }
    let mut eq = 0.0f64;
    for _ in 0..1_000 {
        let t = sample::angle(&mut rng);
        let (s1, s2) = (rng.gen_range(-SAMPLE_RADIUS..SAMPLE_RADIUS), rng.gen_range(-SAMPLE_RADIUS..SAMPLE_RADIUS));
        let (a, b) = (xy(e(t) * s1), xy(e(t) * s2));
        eq = eq.max((lib(h_ball(&a, &b))? - lib(rho_ball(&a, &b))?).abs());
    }
    check(lower >= -1e-12, "h ≤ ρ", format!("{lower:e}"))?;
    check(upper >= -1e-12, "ρ ≤ h/√(1−m²)", format!("{upper:e}"))?;
    check(eq < 1e-10, "collinear equality", format!("{eq:e}"))?;
    Ok(format!("margins {lower:.3e} / {upper:.3e}, diameter residual {eq:.3e}"))
}

fn lower_bounds() -> Outcome {
    let mut rng = sample::stream(SEED, 3);
    let (mut first, mut second, mut eq) = (f64::INFINITY, f64::INFINITY, 0.0f64);
    for dim in [2, 3] {
        for _ in 0..100_000 {
            let a = sample::point_in_ball(&mut rng, dim, SAMPLE_RADIUS);
            let b = sample::point_in_ball(&mut rng, dim, SAMPLE_RADIUS);
            let h = lib(h_ball(&a, &b))?;
            let rho = lib(rho_ball(&a, &b))?;
            let bound = vecn::dist(&a, &b) / (4.0 - vecn::norm_sq(&vecn::add(&a, &b))).sqrt();
            first = first.min((rho / 4.0).tanh() - (h / 4.0).tanh());
            second = second.min((h / 4.0).tanh() - bound);
        }
        for _ in 0..1_000 {
            let a = sample::point_in_ball(&mut rng, dim, SAMPLE_RADIUS);
            let mb = vecn::scale(&a, -1.0);
            eq = eq.max(((lib(h_ball(&a, &mb))? / 4.0).tanh() - vecn::norm(&a)).abs());
        }
    }
    check(first >= -1e-12, "th(ρ/4) ≥ th(h/4)", format!("{first:e}"))?;
    check(second >= -1e-12, "th(h/4) ≥ bound", format!("{second:e}"))?;
    check(eq < 1e-12, "equality at a = −b", format!("{eq:e}"))?;
    Ok(format!("margins {first:.3e} / {second:.3e}, equality residual {eq:.3e}"))
}

fn unit_disk_bound() -> Outcome {
    let mut rng = sample::stream(SEED, 4);
    let tri = lib(ConvexPolygon::preset("inscribed-triangle"))?;
    let sq = lib(ConvexPolygon::preset("inscribed-square"))?;
    let mut worst = f64::INFINITY;
    let disk = ConvexDomain::Ball(2);
    for _ in 0..10_000 {
        let (a, b) = disk_pair(&mut rng);
        worst = worst.min(lib(my210_margin(&disk, &xy(a), &xy(b)))?);
    }
    for poly in [&tri, &sq] {
        let dom = ConvexDomain::Polygon(poly.clone());
        for _ in 0..10_000 {
            let a = sample::point_in_polygon(&mut rng, poly, 1e-6);
            let b = sample::point_in_polygon(&mut rng, poly, 1e-6);
            if (a - b).norm() < 1e-9 {
                continue;
            }
            let h = polygon_h_oracle(poly, a, b);
            let m = lib(my210_margin(&dom, &xy(a), &xy(b)))?;
            check(((2.0 * (h / 4.0).tanh() - (a - b).norm()) - m).abs() < 1e-9, "polygon oracle", format!("{m:e}"))?;
            worst = worst.min(m);
        }
    }
    let mut eq = 0.0f64;
    for _ in 0..1_000 {
        let a = sample::point_in_disk(&mut rng, SAMPLE_RADIUS);
        eq = eq.max(lib(my210_margin(&disk, &xy(a), &xy(-a)))?.abs());
    }
    check(worst >= -1e-12, "2·th(h/4) ≥ |a−b|", format!("{worst:e}"))?;
    check(eq < 1e-12, "diameter equality", format!("{eq:e}"))?;
    Ok(format!("min margin {worst:.3e}, diameter residual {eq:.3e}"))
}

fn ellipsoid_spheres() -> Outcome {
    let mut rng = sample::stream(SEED, 5);
    let (mut dist, mut nsc) = (0.0f64, 0.0f64);
    for dim in [2, 3, 5] {
        for _ in 0..100 {
            let c = sample::point_in_ball(&mut rng, dim, 0.95);
            let r = rng.gen_range(0.05..3.0);
            let ell = lib(hilbert_sphere_ellipsoid(&c, r))?;
            for _ in 0..1_000 {
                let x = ell.surface_point(&sample::unit_vector(&mut rng, dim));
                dist = dist.max((lib(h_ball(&x, &c))? - r).abs());
                dist = dist.max((h_ball_oracle(&x, &c) - r).abs());
                nsc = nsc.max(nsc_residual(&c, r, &x).abs());
            }
        }
    }
    let mut centered = 0.0f64;
    for dim in [2, 3, 5] {
        for k in 1..=20 {
            let r = 0.25 * k as f64;
            let ell = lib(hilbert_sphere_ellipsoid(&vec![0.0; dim], r))?;
            let want = (r / 2.0).tanh();
            centered = centered.max((ell.a_min - want).abs()).max((ell.a_max - want).abs()).max(vecn::norm(&ell.center));
        }
    }
    check(dist < 1e-9, "|h(x,c) − R|", format!("{dist:e}"))?;
    check(nsc < 1e-10, "level-set residual", format!("{nsc:e}"))?;
    check(centered < 1e-12, "centered radius", format!("{centered:e}"))?;
    Ok(format!("distance {dist:.3e}, level set {nsc:.3e}, centered {centered:.3e}"))
}

/// `u, c, d, v` symmetric about the direction `φ` and `w` on the far arc.
fn parallel_quintuple(rng: &mut SampleRng) -> [Complex64; 5] {
    let phi = sample::angle(rng);
    let big = rng.gen_range(0.2..PI - 0.2);
    let small = rng.gen_range(0.05..big - 0.05);
    let w = phi + big + rng.gen_range(0.05..0.95) * (2.0 * PI - 2.0 * big);
    [e(phi - big), e(phi - small), e(phi + small), e(phi + big), e(w)]
}

fn midpoints() -> Outcome {
    let mut rng = sample::stream(SEED, 6);
    let mut hyp = 0.0f64;
    for _ in 0..10_000 {
        let (a, b) = disk_pair(&mut rng);
        let m = lib(hyp_midpoint(a, b))?;
        let half = rho_oracle(&xy(a), &xy(b)) / 2.0;
        hyp = hyp.max((rho_oracle(&xy(a), &xy(m)) - half).abs()).max((rho_oracle(&xy(m), &xy(b)) - half).abs());
    }
    let (mut hil, mut hil_rho) = (0.0f64, 0.0f64);
    for _ in 0..1_000 {
        let [u, c, d, v, w] = parallel_quintuple(&mut rng);
        let conf = lib(midpoint_configuration(u, c, d, v, w))?;
        let (pa, pb, pp) = (xy(conf.a), xy(conf.b), xy(conf.p));
        hil = hil.max((h_ball_oracle(&pa, &pp) - h_ball_oracle(&pp, &pb)).abs());
        hil_rho = hil_rho.max((rho_oracle(&pa, &pp) - rho_oracle(&pp, &pb)).abs());
        let q = lib(hilbert_midpoint(&ConvexDomain::Ball(2), &pa, &pb))?;
        hil = hil.max(vecn::dist(&q, &pp));
    }
    let mut fuji = 0.0f64;
    let mut fuji_pass = true;
    for _ in 0..10_000 {
        let (a, b) = disk_pair(&mut rng);
        let rep = lib(lem_fuji_check(a, b))?;
        fuji_pass &= rep.all_pass();
        fuji = fuji.max(rep.margins.values().map(|m| 1e-9 - m).fold(0.0, f64::max));
    }
    check(hyp < 1e-9, "hyperbolic midpoint", format!("{hyp:e}"))?;
    check(hil < 1e-9, "Hilbert midpoint h", format!("{hil:e}"))?;
    check(hil_rho < 1e-9, "Hilbert midpoint ρ", format!("{hil_rho:e}"))?;
    check(fuji_pass && fuji < 1e-9, "tangent-intersection construction", format!("{fuji:e}"))?;
    Ok(format!("ρ halves {hyp:.3e}, h {hil:.3e}, ρ {hil_rho:.3e}, construction {fuji:.3e}"))
}

fn tangency() -> Outcome {
    let mut rng = sample::stream(SEED, 7);
    let (mut modulus, mut tangent, mut agree) = (0.0f64, 0.0f64, 0.0f64);
    let mut compared = 0;
    for _ in 0..10_000 {
        let (a, b) = disk_pair(&mut rng);
        let (w1, w2) = lib(tangency_points(a, b))?;
        let mut side = [0.0; 2];
        for (k, w) in [w1, w2].into_iter().enumerate() {
            modulus = modulus.max((w.norm() - 1.0).abs());
            let circle = lib(circle_through(a, b, w))?;
            tangent = tangent.max((circle.center.norm() + circle.radius - 1.0).abs());
            side[k] = cross(b - a, w - a);
        }
        check(side[0] * side[1] < 0.0, "opposite sides", format!("a = {a}, b = {b}"))?;
        if (a.norm_sqr() - b.norm_sqr()).abs() > 1e-3 {
            let (v1, v2, _) = lib(tangency_points_via_center(a, b))?;
            agree = agree.max((v1 - w1).norm()).max((v2 - w2).norm());
            compared += 1;
        }
    }
    check(modulus < 1e-10, "|w| = 1", format!("{modulus:e}"))?;
    check(tangent < 1e-9, "internal tangency", format!("{tangent:e}"))?;
    check(agree < 1e-10, "center formula", format!("{agree:e}"))?;
    Ok(format!("|w|−1 {modulus:.3e}, tangency {tangent:.3e}, center formula {agree:.3e} on {compared} pairs"))
}

fn cross_ratio_projection() -> Outcome {
    let mut rng = sample::stream(SEED, 8);
    let (mut var, mut v_mod, mut closed, mut square) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut done = 0;
    while done < 1_000 {
        let t = sample::sorted_angles(&mut rng, 4);
        let gap = (t[1] - t[0]).min(t[2] - t[1]).min(t[3] - t[2]).min(2.0 * PI - t[3] + t[0]);
        if gap < 1e-2 {
            continue;
        }
        done += 1;
        let [u, c, d, v] = [e(t[0]), e(t[1]), e(t[2]), e(t[3])];
        let vals: Vec<f64> = (0..20)
            .map(|_| {
                let w = e(t[3] + rng.gen_range(0.01..0.99) * (2.0 * PI - t[3] + t[0]));
                let (a, b) = lib(projection_pair(u, c, d, v, w))?;
                lib(cross_ratio_c(u, a, b, v))
            })
            .collect::<Result<_, _>>()?;
        let mean = vals.iter().sum::<f64>() / 20.0;
        var = var.max(vals.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / 20.0);

        // Same points as a, b, c, d with u on the arc (a, b) and p on [a, b].
        let [a, b, c, d] = [e(t[0]), e(t[1]), e(t[2]), e(t[3])];
        let uu = e(rng.gen_range(t[0]..t[1]));
        let p = a + (b - a) * rng.gen_range(0.05..0.95);
        if gap >= 0.3 {
            v_mod = v_mod.max((lib(little_thm_v(a, b, c, d, uu, p))?.norm() - 1.0).abs());
        }

        // Parallel chords [u, v] and [c, d].
        let [u, c, d, v, w] = parallel_quintuple(&mut rng);
        let (a1, b1) = lib(projection_pair(u, c, d, v, w))?;
        let (a2, b2) = lib(parallel_projection_closed_form(u, c, d, v, w))?;
        closed = closed.max((a1 - a2).norm()).max((b1 - b2).norm());

        // Parallel chords [a, b] and [c, d]; midpoint of [a₂, b₂] maps to the arc midpoint.
        let psi = sample::angle(&mut rng);
        // Short chords [a, b] are ill-conditioned in double precision.
        let big = rng.gen_range(0.3..PI - 0.3);
        let small = rng.gen_range(0.1..(PI - big - 0.1).min(0.5 * PI - 0.05));
        let [a, b, c, d] = [e(psi - big), e(psi + big), e(psi + PI - small), e(psi + PI + small)];
        let uu = e(psi + rng.gen_range(-0.9..0.9) * big);
        let (a2, b2) = lib(little_thm_chord_points(a, b, c, d, uu))?;
        let want = ((a - c) / (a - d)).norm_sqr();
        square = square.max((h_ball_oracle(&xy(a2), &xy(b2)).exp() - want).abs() / want);
        let mid = lib(hilbert_midpoint(&ConvexDomain::Ball(2), &xy(a2), &xy(b2)))?;
        let vv = lib(little_thm_v(a, b, c, d, uu, Complex64::new(mid[0], mid[1])))?;
        closed = closed.max((vv - e(psi + PI)).norm());
    }
    check(var < 1e-18, "variance over w", format!("{var:e}"))?;
    check(v_mod < 1e-9, "|v| = 1", format!("{v_mod:e}"))?;
    check(closed < 1e-10, "parallel closed forms", format!("{closed:e}"))?;
    check(square < 1e-9, "parallel cross-ratio square", format!("{square:e}"))?;
    Ok(format!("variance {var:.3e}, |v|−1 {v_mod:.3e}, closed forms {closed:.3e}"))
}

fn special_functions() -> Outcome {
    let mut quad = 0.0f64;
    for k in 0..100 {
        let r = 0.99 * k as f64 / 99.0;
        quad = quad.max((lib(ell_k(r))? - ell_k_oracle(r)).abs());
    }
    let mu_half = (lib(mu(FRAC_1_SQRT_2))? - PI / 2.0).abs();
    let mut id = 0.0f64;
    for k in 0..=100 {
        let r = k as f64 / 100.0;
        id = id.max((lib(phi_k(1.0, r))? - r).abs());
    }
    let c1 = (lib(c_of_k(1.0))? - 1.0).abs();
    let mut chain = f64::INFINITY;
    for k in [1.0, 1.5, 2.0, 3.0, 5.0] {
        chain = chain.min(lib(c_bounds(k))?.min_gap());
    }
    let (u, v) = (bound_u(), bound_v());
    check(quad < 1e-12, "𝒦 vs quadrature", format!("{quad:e}"))?;
    check(mu_half < 1e-12, "μ(1/√2) = π/2", format!("{mu_half:e}"))?;
    check(id < 1e-12, "φ₁ = id", format!("{id:e}"))?;
    check(c1 < 1e-12, "c(1) = 1", format!("{c1:e}"))?;
    check(chain >= -1e-12, "bounds chain", format!("{chain:e}"))?;
    check(u > 1.5412 && u < 1.5413, "u", format!("{u}"))?;
    check(v < 1.3507 && v > 1.3506, "v", format!("{v}"))?;
    Ok(format!("quadrature {quad:.3e}, chain gap {chain:.3e}, u = {u:.6}, v = {v:.6}"))
}

fn holder_bound() -> Outcome {
    let start = Instant::now();
    let mut worst = f64::INFINITY;
    let mut rng = sample::stream(SEED, 9);
    for (i, (spec, k)) in holder_catalog().into_iter().enumerate() {
        let rep = lib(holder_verify(&spec, k, 10_000, SEED + i as u64))?;
        worst = worst.min(rep.margins["holder"]);
        // Spot check against values recomputed here.
        for _ in 0..100 {
            let (a, b) = disk_pair(&mut rng);
            let inp = lib(HolderBoundInput::new(k, a, b))?;
            let (fa, fb) = (lib(qc_map_eval(&spec, a))?, lib(qc_map_eval(&spec, b))?);
            let h = h_ball_oracle(&xy(fa), &xy(fb));
            worst = worst.min(lib(holder_rhs(&inp))? - h);
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(worst >= -1e-9, "min margin", format!("{worst:e}"))?;
    check(secs < 30.0, "runtime", format!("{secs:.2} s"))?;
    Ok(format!("min margin {worst:.3e}, {secs:.2} s"))
}

fn hilbert_circles() -> Outcome {
    let disk = ConvexDomain::Ball(2);
    let mut round = 0.0f64;
    for t in [0.1, 0.5, 1.0, 2.0, 4.0] {
        let poly = lib(hilbert_ball_boundary(&disk, &[0.0, 0.0], t, 360))?;
        let want = (t / 2.0).tanh();
        round = poly.points.iter().map(|p| (p.norm() - want).abs()).fold(round, f64::max);
    }
    let tri_poly = lib(ConvexPolygon::preset("triangle"))?;
    let tri = ConvexDomain::Polygon(tri_poly.clone());
    let (z, t) = ([0.1, -0.05], 0.8);
    let circle = lib(hilbert_ball_boundary(&tri, &z, t, 720))?;
    let fit = lib(hexagon_fit_residual(&tri, &z, t, &circle))?;
    let zc = Complex64::new(z[0], z[1]);
    let on_level = circle.points.iter().map(|&p| (polygon_h_oracle(&tri_poly, zc, p) - t).abs()).fold(0.0, f64::max);

    let outer = lib(ConvexPolygon::preset("square"))?;
    let inner = lib(ConvexPolygon::regular(6, 0.3))?;
    check(outer.contains_polygon(&inner), "nesting", "hexagon not inside the square".into())?;
    let mut rng = sample::stream(SEED, 10);
    let mut nested = f64::INFINITY;
    for _ in 0..1_000 {
        let a = sample::point_in_polygon(&mut rng, &inner, 1e-6);
        let b = sample::point_in_polygon(&mut rng, &inner, 1e-6);
        let h_in = lib(h_chord(&ConvexDomain::Polygon(inner.clone()), &xy(a), &xy(b)))?;
        let h_out = lib(h_chord(&ConvexDomain::Polygon(outer.clone()), &xy(a), &xy(b)))?;
        nested = nested.min(h_in - h_out);
    }
    check(round < 1e-9, "disk radius", format!("{round:e}"))?;
    check(circle.is_convex(), "triangle circle convex", "not convex".into())?;
    check(fit < 1e-3, "hexagon fit", format!("{fit:e}"))?;
    check(on_level < 1e-9, "triangle level set", format!("{on_level:e}"))?;
    check(nested >= -1e-12, "domain monotonicity", format!("{nested:e}"))?;
    Ok(format!("radius {round:.3e}, hexagon fit {fit:.3e}, nesting margin {nested:.3e}"))
}

fn apollonian_mobius() -> Outcome {
    let mut rng = sample::stream(SEED, 11);
    let mut grid_err = 0.0f64;
    for (name, margin) in [("square", 0.05), ("triangle", 0.05), ("sector:60", 0.02)] {
        let poly = lib(ConvexPolygon::preset(name))?;
        let dom = ConvexDomain::Polygon(poly.clone());
        let grid = polygon_boundary_grid(&poly, 100_000);
        let pairs = if name == "square" { 40 } else { 30 };
        for _ in 0..pairs {
            let a = sample::point_in_polygon(&mut rng, &poly, margin);
            let b = sample::point_in_polygon(&mut rng, &poly, margin);
            let alpha = lib(apollonian(&dom, &xy(a), &xy(b)))?;
            grid_err = grid_err.max((alpha - alpha_oracle(&grid, a, b)).abs());
        }
    }
    let disk = ConvexDomain::Ball(2);
    let mut disk_err = 0.0f64;
    for _ in 0..20 {
        let a = xy(sample::point_in_disk(&mut rng, 0.9));
        let b = xy(sample::point_in_disk(&mut rng, 0.9));
        let rho = rho_oracle(&a, &b);
        let alpha = lib(apollonian(&disk, &a, &b))?;
        let delta = lib(mobius_delta_sampled(&disk, &a, &b, 10_000))?.value;
        disk_err = disk_err.max((alpha - rho).abs()).max((delta - rho).abs());
    }
    let (mut lower, mut upper) = (f64::INFINITY, f64::INFINITY);
    for name in ["square", "triangle"] {
        let poly = lib(ConvexPolygon::preset(name))?;
        let dom = ConvexDomain::Polygon(poly.clone());
        for _ in 0..10 {
            let a = xy(sample::point_in_polygon(&mut rng, &poly, 0.05));
            let b = xy(sample::point_in_polygon(&mut rng, &poly, 0.05));
            let alpha = lib(apollonian(&dom, &a, &b))?;
            let delta = lib(mobius_delta(&dom, &a, &b, 10_000))?.value;
            lower = lower.min(delta - alpha);
            upper = upper.min((alpha.exp() + 2.0).ln() - delta);
        }
    }
    check(grid_err < 1e-6, "α vs boundary grid", format!("{grid_err:e}"))?;
    check(disk_err < 1e-6, "disk α = δ = ρ", format!("{disk_err:e}"))?;
    check(lower >= -1e-4, "α ≤ δ", format!("{lower:e}"))?;
    check(upper >= -1e-4, "δ ≤ log(e^α + 2)", format!("{upper:e}"))?;
    Ok(format!("grid {grid_err:.3e}, disk {disk_err:.3e}, sandwich {lower:.3e} / {upper:.3e}"))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = sample::stream(SEED, 12);
    let disk = ConvexDomain::Ball(2);
    let (mut chord, mut lines, mut phis) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..100_000 {
        let (a, b) = disk_pair(&mut rng);
        let (a, b) = (xy(a), xy(b));
        chord = chord.max((lib(h_chord(&disk, &a, &b))? - lib(h_ball(&a, &b))?).abs());
    }
    for _ in 0..10_000 {
        // Chords [p, q] and [s, w] that cross inside the disk.
        let t = sample::sorted_angles(&mut rng, 4);
        if (t[1] - t[0]).min(t[2] - t[1]).min(t[3] - t[2]).min(2.0 * PI - t[3] + t[0]) < 1e-2 {
            continue;
        }
        let [p, s, q, w] = [e(t[0]), e(t[1]), e(t[2]), e(t[3])];
        let x = lib(lis_unit_circle(p, q, s, w))?;
        let y = lib(lis(p, q, s, w))?;
        lines = lines.max((x - y).norm()).max((y - lis_oracle(p, q, s, w)).norm());
    }
    for i in 1..=20 {
        for j in 1..=20 {
            let k = 1.0 + 4.0 * (i - 1) as f64 / 19.0;
            let r = j as f64 / 21.0;
            phis = phis.max((lib(phi_k(k, r))? - lib(phi_k_via_gamma(k, r))?).abs());
        }
    }
    check(chord < 1e-9, "h_chord vs closed form", format!("{chord:e}"))?;
    check(lines < 1e-10, "circle LIS vs general LIS", format!("{lines:e}"))?;
    check(phis < 1e-10, "φ via μ vs via γ₂", format!("{phis:e}"))?;
    Ok(format!("chord {chord:.3e}, LIS {lines:.3e}, φ {phis:.3e}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("functional identity", functional_identity),
        ("metric sandwich", metric_sandwich),
        ("lower bounds", lower_bounds),
        ("unit-disk bound", unit_disk_bound),
        ("ellipsoid spheres", ellipsoid_spheres),
        ("midpoints", midpoints),
        ("tangency", tangency),
        ("cross-ratio projection", cross_ratio_projection),
        ("special functions", special_functions),
        ("Hölder bound", holder_bound),
        ("Hilbert circles", hilbert_circles),
        ("Apollonian and Möbius metrics", apollonian_mobius),
        ("oracle equivalence", oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
