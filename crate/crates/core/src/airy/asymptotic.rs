//! Large-argument expansions of `Ai`, `Ai'` and `AI` in powers of `1/zeta`,
//! returned with the factor `e^{zeta}` removed.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::scalar::polar_pow;

const TERMS: usize = 90;

struct Tables {
    u: [f64; TERMS],
    v: [f64; TERMS],
    w: [f64; TERMS],
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let mut u = [0.0; TERMS];
        let mut v = [0.0; TERMS];
        let mut w = [0.0; TERMS];
        u[0] = 1.0;
        v[0] = 1.0;
        w[0] = 1.0;
        for k in 1..TERMS {
            let kf = k as f64;
            u[k] = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
                / ((2.0 * kf - 1.0) * 216.0 * kf);
            v[k] = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u[k];
            w[k] = u[k] + (2.0 * kf - 1.0) / 2.0 * w[k - 1];
        }
        Tables { u, v, w }
    })
}

/// Sums `sum_k (-1)^k c_k zeta^{-k}` up to the smallest term (or until the
/// terms are negligible). Returns the sum and the size of the last term kept.
fn sum_alternating(c: &[f64], inv_zeta: Complex64) -> (Complex64, f64) {
    let mut acc = Complex64::new(1.0, 0.0);
    let mut p = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for &ck in c.iter().skip(1) {
        p *= -inv_zeta;
        let term = p * ck;
        let size = term.norm();
        if size >= last {
            break;
        }
        acc += term;
        last = size;
        if size < 1e-17 * acc.norm() {
            break;
        }
    }
    (acc, last)
}

/// `(Ai, Ai', AI) * e^{zeta(z)}` at `z = r e^{i theta}`, `|theta| < pi`.
pub fn triple_scaled(r: f64, theta: f64) -> [Complex64; 3] {
    let t = tables();
    let zeta = polar_pow(r, theta, 1.5) * (2.0 / 3.0);
    let inv = zeta.inv();
    let norm = 0.5 / std::f64::consts::PI.sqrt();
    let (su, _) = sum_alternating(&t.u, inv);
    let (sv, _) = sum_alternating(&t.v, inv);
    let (sw, _) = sum_alternating(&t.w, inv);
    [
        polar_pow(r, theta, -0.25) * su * norm,
        -polar_pow(r, theta, 0.25) * sv * norm,
        polar_pow(r, theta, -0.75) * sw * norm,
    ]
}

/// Partial sum of the `Bi` expansion, `sum_{k<n} u_k zeta^{-k}`, and the
/// first omitted term. Used to check the growing-solution asymptotics.
pub fn bi_partial_sum(zeta: Complex64, n: usize) -> (Complex64, Complex64) {
    let t = tables();
    let inv = zeta.inv();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut p = Complex64::new(1.0, 0.0);
    for k in 0..n {
        acc += p * t.u[k];
        p *= inv;
    }
    (acc, p * t.u[n])
}
