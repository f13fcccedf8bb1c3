//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use hypack::lorentz::{bilinear_form, LorentzVector};
use hypack::orthoscheme::TruncatedOrthoscheme;

/// Tanh–sinh quadrature of `f` on `[a, b]`; tolerates integrable endpoint
/// singularities because nodes never touch the endpoints.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let h: f64 = 1.0 / 64.0;
    let mut sum = 0.0;
    let n = (4.0 / h) as i64;
    for k in -n..=n {
        let t = k as f64 * h;
        let u = std::f64::consts::FRAC_PI_2 * t.sinh();
        let x = u.tanh();
        let w = std::f64::consts::FRAC_PI_2 * t.cosh() / u.cosh().powi(2);
        // distance from the nearer endpoint, computed without cancellation
        let gap = half / (u.abs().exp() * u.cosh());
        let xs = if x < 0.0 { a + gap } else { b - gap };
        let xs = if k == 0 { mid } else { xs };
        if w == 0.0 || gap == 0.0 {
            continue;
        }
        sum += w * f(xs);
    }
    sum * half * h
}

/// `-∫_0^x log|2 sin t| dt` by quadrature.
pub fn lobachevsky_quadrature(x: f64) -> f64 {
    -tanh_sinh(|t| (2.0 * t.sin()).abs().ln(), 0.0, x)
}

/// Smallest signed distance from `x` to the faces, `None` outside.
pub fn min_face_distance(o: &TruncatedOrthoscheme, x: &LorentzVector) -> Option<f64> {
    let n = (-x.self_product()).sqrt();
    let mut best = f64::INFINITY;
    for i in 0..5 {
        let u = o.unit_face(i);
        let s = bilinear_form(x, &u) / n;
        if s < 0.0 {
            return None;
        }
        best = best.min(s.asinh());
    }
    Some(best)
}

pub struct GridSearch {
    pub interior_points: usize,
    pub best: f64,
    pub best_point: [f64; 3],
}

/// Brute-force maximin face distance over a regular Klein-coordinate grid
/// covering the polyhedron, refined until at least `min_points` grid
/// points fall inside.
pub fn grid_search(o: &TruncatedOrthoscheme, min_points: usize) -> GridSearch {
    let pts: Vec<[f64; 3]> = [0, 1, 2, 4, 5]
        .iter()
        .map(|&l| o.point(l).klein().unwrap())
        .collect();
    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    for p in &pts {
        for k in 0..3 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let mut n = 100usize;
    loop {
        let mut count = 0;
        let mut best = f64::NEG_INFINITY;
        let mut best_point = [0.0; 3];
        for i in 0..n {
            let x = lo[0] + (hi[0] - lo[0]) * (i as f64 + 0.5) / n as f64;
            for j in 0..n {
                let y = lo[1] + (hi[1] - lo[1]) * (j as f64 + 0.5) / n as f64;
                for k in 0..n {
                    let z = lo[2] + (hi[2] - lo[2]) * (k as f64 + 0.5) / n as f64;
                    if x * x + y * y + z * z >= 1.0 {
                        continue;
                    }
                    let p = LorentzVector::point(1.0, x, y, z);
                    if let Some(d) = min_face_distance(o, &p) {
                        count += 1;
                        if d > best {
                            best = d;
                            best_point = [x, y, z];
                        }
                    }
                }
            }
        }
        if count >= min_points {
            return GridSearch {
                interior_points: count,
                best,
                best_point,
            };
        }
        let scale = (min_points as f64 / count.max(1) as f64).cbrt();
        n = ((n as f64) * scale * 1.05).ceil() as usize;
    }
}

/// Heron's formula.
pub fn heron(a: f64, b: f64, c: f64) -> f64 {
    let s = 0.5 * (a + b + c);
    (s * (s - a) * (s - b) * (s - c)).max(0.0).sqrt()
}
