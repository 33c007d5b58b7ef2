//! Seeded random streams and samplers for points of the ball, the circle and
//! polygons.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::polygon::ConvexPolygon;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_501;

/// Default outer radius for samples in the ball, away from the boundary.
pub const SAMPLE_RADIUS: f64 = 0.99;

pub type SampleRng = ChaCha8Rng;

/// Independent stream `key` of `seed`.
pub fn stream(seed: u64, key: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(key);
    rng
}

pub fn unit_vector(rng: &mut SampleRng, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let r = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if r > 1e-12 {
            return v.into_iter().map(|x| x / r).collect();
        }
    }
}

/// Uniform point of the ball of radius `rmax` in ℝⁿ.
pub fn point_in_ball(rng: &mut SampleRng, n: usize, rmax: f64) -> Vec<f64> {
    let dir = unit_vector(rng, n);
    let r = rmax * rng.gen::<f64>().powf(1.0 / n as f64);
    dir.into_iter().map(|x| r * x).collect()
}

pub fn point_in_disk(rng: &mut SampleRng, rmax: f64) -> Complex64 {
    let r = rmax * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, 2.0 * PI * rng.gen::<f64>())
}

pub fn angle(rng: &mut SampleRng) -> f64 {
    2.0 * PI * rng.gen::<f64>()
}

pub fn circle_point(rng: &mut SampleRng) -> Complex64 {
    Complex64::from_polar(1.0, angle(rng))
}

/// `k` increasing angles in `[0, 2π)`.
pub fn sorted_angles(rng: &mut SampleRng, k: usize) -> Vec<f64> {
    let mut t: Vec<f64> = (0..k).map(|_| angle(rng)).collect();
    t.sort_by(f64::total_cmp);
    t
}

/// Uniform point of `poly` at distance at least `margin` from its boundary.
pub fn point_in_polygon(rng: &mut SampleRng, poly: &ConvexPolygon, margin: f64) -> Complex64 {
    let vs = poly.vertices();
    let (mut lo, mut hi) = (vs[0], vs[0]);
    for v in vs {
        lo = Complex64::new(lo.re.min(v.re), lo.im.min(v.im));
        hi = Complex64::new(hi.re.max(v.re), hi.im.max(v.im));
    }
    loop {
        let z = Complex64::new(rng.gen_range(lo.re..hi.re), rng.gen_range(lo.im..hi.im));
        if poly.signed_distance(z) > margin {
            return z;
        }
    }
}
