//! Argument-principle check that `sqrt(z) Ai(z) - Ai'(z)` has no zeros in
//! the slit plane.
//!
//! With `f = sqrt(pi) (sqrt(z) Ai - Ai')` and `g = e^{zeta} f`, the contour
//! runs from 0 to `-R - i0` under the cut, around the circle `|z| = R`
//! counterclockwise, and back to 0 above the cut. `g` is tracked with
//! continuous argument; `R = |a_k|` pins `arg g` at the turning points.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::airy::{airy_bundle_polar, Scaling};
use crate::scalar::{polar_pow, Side};
use crate::{Error, Result};

/// `g(z)` at `z = r e^{i theta}`, from the exponentially scaled Airy functions.
pub fn denominator_g_polar(r: f64, theta: f64) -> Result<Complex64> {
    let b = airy_bundle_polar(r, theta, Scaling::ExpScaled)?;
    Ok(PI.sqrt() * (polar_pow(r, theta, 0.5) * b.ai - b.ai_prime))
}

/// `g(z)`; on the negative real axis `side` picks the boundary value.
pub fn denominator_g(z: Complex64, side: Option<Side>) -> Result<Complex64> {
    let theta = crate::scalar::arg_with_side(z, side)?;
    denominator_g_polar(z.norm(), theta)
}

/// The `k`-th zero of `Ai`, from the asymptotic seed polished by Newton's method.
pub fn airy_zero(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("Airy zeros are numbered from 1".into()));
    }
    let t = 3.0 * PI * (4.0 * k as f64 - 1.0) / 8.0;
    let mut a = -t.powf(2.0 / 3.0) * (1.0 + 5.0 / 48.0 / (t * t));
    for _ in 0..50 {
        let b = airy_bundle_polar(-a, PI, Scaling::Unscaled)?;
        let step = b.ai.re / b.ai_prime.re;
        a -= step;
        if step.abs() <= 1e-15 * a.abs() {
            return Ok(a);
        }
    }
    Err(Error::Consistency(format!("Newton iteration for the Airy zero a_{k} did not converge")))
}

/// Contour legs in traversal order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Leg {
    /// `0 -> -R - i0`.
    Lower,
    /// `R e^{i theta}`, `theta` from `-pi` to `pi`.
    Circle,
    /// `-R + i0 -> 0`.
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TracePoint {
    pub leg: Leg,
    pub re: f64,
    pub im: f64,
    /// Side of the cut for points on the negative axis.
    pub side: Option<&'static str>,
    pub modulus: f64,
    /// Continuous argument of `g`, starting from 0 at the origin.
    pub arg: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContourTrace {
    pub k: usize,
    pub radius: f64,
    pub points: Vec<TracePoint>,
    /// Change of `arg g` along each leg.
    pub lower_change: f64,
    pub circle_change: f64,
    pub upper_change: f64,
    /// Largest argument change between consecutive samples.
    pub max_jump: f64,
    pub min_modulus: f64,
    /// `arg f(a_j - i0)` for `j = 1..=k`.
    pub lower_arg_f_at_zeros: Vec<f64>,
    pub winding_number: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContourConfig {
    /// Largest accepted argument change between consecutive samples.
    pub max_step_arg: f64,
    /// Initial samples per unit length along the radial legs.
    pub radial_density: f64,
    /// Initial samples on the circle.
    pub circle_samples: usize,
    pub max_depth: usize,
}

impl Default for ContourConfig {
    fn default() -> Self {
        ContourConfig {
            max_step_arg: FRAC_PI_4,
            radial_density: 4.0,
            circle_samples: 256,
            max_depth: 40,
        }
    }
}

/// A point on the contour as `(r, theta)`.
type Param = dyn Fn(f64) -> (f64, f64);

struct Walker<'a> {
    cfg: &'a ContourConfig,
    arg: f64,
    max_jump: f64,
    min_modulus: f64,
    points: Vec<TracePoint>,
}

impl Walker<'_> {
    fn eval(p: &Param, t: f64) -> Result<Complex64> {
        let (r, theta) = p(t);
        denominator_g_polar(r, theta)
    }

    fn record(&mut self, leg: Leg, p: &Param, t: f64, g: Complex64) {
        let (r, theta) = p(t);
        let side = if theta.abs() == PI && r > 0.0 {
            Some(if theta > 0.0 { "+i0" } else { "-i0" })
        } else {
            None
        };
        let z = Complex64::from_polar(r, theta);
        self.min_modulus = self.min_modulus.min(g.norm());
        self.points.push(TracePoint {
            leg,
            re: z.re,
            im: if side.is_some() { 0.0 } else { z.im },
            side,
            modulus: g.norm(),
            arg: self.arg,
        });
    }

    /// Advances the continuous argument from `t0` to `t1`, bisecting until
    /// every step is below the limit and agrees with its two halves.
    fn step(&mut self, leg: Leg, p: &Param, t0: f64, g0: Complex64, t1: f64, g1: Complex64, depth: usize) -> Result<()> {
        let d = (g1 / g0).arg();
        let tm = 0.5 * (t0 + t1);
        let gm = Self::eval(p, tm)?;
        let d1 = (gm / g0).arg();
        let d2 = (g1 / gm).arg();
        if d.abs() <= self.cfg.max_step_arg && (d1 + d2 - d).abs() <= 1e-9 {
            self.arg += d1;
            self.max_jump = self.max_jump.max(d1.abs());
            self.record(leg, p, tm, gm);
            self.arg += d2;
            self.max_jump = self.max_jump.max(d2.abs());
            self.record(leg, p, t1, g1);
            return Ok(());
        }
        if depth >= self.cfg.max_depth {
            return Err(Error::StepResolution(tm));
        }
        self.step(leg, p, t0, g0, tm, gm, depth + 1)?;
        self.step(leg, p, tm, gm, t1, g1, depth + 1)
    }

    /// Walks `p` over the breakpoints `ts`, each interval split into `n` pieces.
    fn walk(&mut self, leg: Leg, p: &Param, ts: &[f64], pieces: impl Fn(f64, f64) -> usize) -> Result<f64> {
        let start = self.arg;
        let mut g0 = Self::eval(p, ts[0])?;
        for pair in ts.windows(2) {
            let n = pieces(pair[0], pair[1]).max(1);
            let h = (pair[1] - pair[0]) / n as f64;
            for j in 0..n {
                let a = pair[0] + h * j as f64;
                let b = if j + 1 == n { pair[1] } else { a + h };
                let g1 = Self::eval(p, b)?;
                self.step(leg, p, a, g0, b, g1, 0)?;
                g0 = g1;
            }
        }
        Ok(self.arg - start)
    }
}

/// Traces `arg g` around the contour with `R = |a_k|`.
pub fn contour_trace(k: usize, cfg: &ContourConfig) -> Result<ContourTrace> {
    if k < 3 {
        return Err(Error::Domain(format!("the certificate uses k >= 3, got {k}")));
    }
    if !(cfg.max_step_arg > 0.0 && cfg.max_step_arg < FRAC_PI_2) {
        return Err(Error::Domain("the step limit must lie in (0, pi/2)".into()));
    }
    let zeros: Vec<f64> = (1..=k).map(airy_zero).collect::<Result<_>>()?;
    let radius = -zeros[k - 1];
    let mut w = Walker {
        cfg,
        arg: 0.0,
        max_jump: 0.0,
        min_modulus: f64::INFINITY,
        points: Vec::new(),
    };
    let density = cfg.radial_density;
    let radial = move |a: f64, b: f64| ((b - a).abs() * density).ceil() as usize;

    // Lower side, with the Airy zeros as breakpoints.
    let lower = |t: f64| (t, -PI);
    let mut ts = vec![0.0];
    ts.extend(zeros.iter().map(|a| -a));
    let g0 = Walker::eval(&lower, 0.0)?;
    w.record(Leg::Lower, &lower, 0.0, g0);
    let mut lower_arg_f_at_zeros = Vec::with_capacity(k);
    let mut lower_change = 0.0;
    for pair in ts.windows(2) {
        lower_change += w.walk(Leg::Lower, &lower, pair, radial)?;
        // arg f = arg g - Im zeta, with zeta(-r - i0) = i (2/3) r^{3/2}.
        lower_arg_f_at_zeros.push(w.arg - 2.0 / 3.0 * pair[1].powf(1.5));
    }

    let circle = move |t: f64| (radius, t);
    let samples = cfg.circle_samples as f64;
    let circle_change = w.walk(Leg::Circle, &circle, &[-PI, PI], |a, b| ((b - a) / (2.0 * PI) * samples).ceil() as usize)?;

    let upper = |t: f64| (-t, PI);
    let mut ts_up: Vec<f64> = ts.iter().map(|r| -r).collect();
    ts_up.reverse();
    let upper_change = w.walk(Leg::Upper, &upper, &ts_up, radial)?;

    let total = lower_change + circle_change + upper_change;
    let winding = (total / (2.0 * PI)).round();
    if (total - 2.0 * PI * winding).abs() > 1e-6 {
        return Err(Error::Consistency(format!("contour does not close: total argument change {total}")));
    }
    Ok(ContourTrace {
        k,
        radius,
        points: w.points,
        lower_change,
        circle_change,
        upper_change,
        max_jump: w.max_jump,
        min_modulus: w.min_modulus,
        lower_arg_f_at_zeros,
        winding_number: winding as i64,
    })
}

/// Number of zeros of `g` inside `|z| < |a_k|`; expected to be 0.
pub fn winding_number(k: usize, cfg: &ContourConfig) -> Result<i64> {
    Ok(contour_trace(k, cfg)?.winding_number)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_origin() {
        let g = denominator_g(Complex64::new(0.0, 0.0), None).unwrap();
        // -sqrt(pi) Ai'(0)
        assert!((g.re - PI.sqrt() * 0.258_819_403_792_806_8).abs() < 1e-14);
        assert!(g.im.abs() < 1e-15);
    }

    #[test]
    fn cut_needs_a_side() {
        assert!(denominator_g(Complex64::new(-2.0, 0.0), None).is_err());
        let a = denominator_g(Complex64::new(-2.0, 0.0), Some(Side::Above)).unwrap();
        let b = denominator_g(Complex64::new(-2.0, 0.0), Some(Side::Below)).unwrap();
        assert!((a - b.conj()).norm() < 1e-14);
    }
}
