//! Taylor-series integration of `y'' = z y` (with the running primitive)
//! along straight segments.

use num_complex::Complex64;

/// `y`, `y'` and `I` with `I' = -y`, at one point.
#[derive(Debug, Clone, Copy)]
pub struct State {
    pub y: Complex64,
    pub yp: Complex64,
    pub int: Complex64,
}

/// One Taylor step from `z0` to `z0 + h`.
pub fn step(z0: Complex64, s: State, h: Complex64) -> State {
    // a_{n+2} (n+2)(n+1) = z0 a_n + a_{n-1}
    let mut a_nm2 = s.y;
    let mut a_nm1 = s.yp;
    let mut y = s.y + s.yp * h;
    let mut yp = s.yp;
    let mut int = s.int - s.y * h - s.yp * h * h * 0.5;
    let mut hp = h; // h^{n-1}
    let scale = s.y.norm() + s.yp.norm() * h.norm();
    let mut a_nm3 = Complex64::new(0.0, 0.0);
    let mut quiet = 0;
    for n in 2..120usize {
        let nf = n as f64;
        let a_n = (z0 * a_nm2 + a_nm3) / (nf * (nf - 1.0));
        yp += a_n * hp * nf;
        hp *= h;
        let t = a_n * hp;
        y += t;
        int -= t * h / (nf + 1.0);
        if t.norm() * nf < 1e-18 * scale.max(y.norm()) {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
        a_nm3 = a_nm2;
        a_nm2 = a_nm1;
        a_nm1 = a_n;
    }
    State { y, yp, int }
}

/// Integrates along the ray `theta` from radius `r_from` to `r_to`.
pub fn along_ray(theta: f64, r_from: f64, r_to: f64, start: State) -> State {
    let dir = Complex64::from_polar(1.0, theta);
    let r_max = r_from.max(r_to);
    // Step length chosen so that |h| sqrt|z| stays below about 1.2.
    let h_len = (1.2 / r_max.sqrt()).min(0.8);
    let n = ((r_to - r_from).abs() / h_len).ceil().max(1.0) as usize;
    let dr = (r_to - r_from) / n as f64;
    let mut s = start;
    for j in 0..n {
        let z0 = dir * (r_from + dr * j as f64);
        s = step(z0, s, dir * dr);
    }
    s
}
