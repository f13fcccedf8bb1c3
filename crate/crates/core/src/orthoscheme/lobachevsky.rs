//! The Lobachevsky function `Л(x) = -∫₀ˣ log|2 sin t| dt`.

use std::f64::consts::PI;
use std::sync::OnceLock;

const TERMS: usize = 40;

/// `ζ(s)` for even `s >= 2` by direct summation with an Euler–Maclaurin tail.
fn zeta_even(s: u32) -> f64 {
    const N: u32 = 32;
    let sf = f64::from(s);
    let n = f64::from(N);
    let head: f64 = (1..N).rev().map(|k| f64::from(k).powf(-sf)).sum();
    let tail = n.powf(1.0 - sf) / (sf - 1.0) + 0.5 * n.powf(-sf) + sf * n.powf(-sf - 1.0) / 12.0
        - sf * (sf + 1.0) * (sf + 2.0) * n.powf(-sf - 3.0) / 720.0
        + sf * (sf + 1.0) * (sf + 2.0) * (sf + 3.0) * (sf + 4.0) * n.powf(-sf - 5.0) / 30240.0;
    head + tail
}

/// `ζ(2n) / (n (2n+1))` for `n = 1..=TERMS`.
fn coefficients() -> &'static [f64; TERMS] {
    static COEFFS: OnceLock<[f64; TERMS]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut c = [0.0; TERMS];
        for (i, slot) in c.iter_mut().enumerate() {
            let n = (i + 1) as u32;
            let nf = f64::from(n);
            *slot = zeta_even(2 * n) / (nf * (2.0 * nf + 1.0));
        }
        c
    })
}

/// Lobachevsky function, odd and `π`-periodic.
///
/// The argument is reduced to `[-π/2, π/2]`, where
/// `Л(x) = x - x ln(2x) + Σ_{n≥1} ζ(2n)/(n(2n+1)) · x (x/π)^{2n}`
/// converges at least as fast as `4^{-n}`.
pub fn lobachevsky(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let y = x - PI * (x / PI).round();
    if y == 0.0 {
        return 0.0;
    }
    let a = y.abs();
    let t = (a / PI) * (a / PI);
    let mut pow = 1.0;
    let mut series = 0.0;
    for c in coefficients() {
        pow *= t;
        let term = c * pow;
        series += term;
        if term < 1e-18 {
            break;
        }
    }
    y.signum() * (a - a * (2.0 * a).ln() + a * series)
}
