//! Densities and tail probabilities by numerical double-Laplace inversion.
//!
//! The density of `sqrt(2) B` is a double integral over `(s, theta)`:
//!
//! ```text
//! f(x) = Gamma(nu) rho^{5/2-nu} / (4 pi^2 i) * x^{3-2nu/3}
//!        * int int e^{i(1-2nu/3)theta} sec^{7/2-nu}(theta) s^{2nu/3-2}
//!                  h(x^{4/3} s^{2/3} e^{i theta/3}) e^{x^2 phi_1(s, theta)} ds dtheta
//! ```
//!
//! with the kernel `h = H e^{gamma z^{3/2}}` evaluated in scaled form, so
//! the only exponential is `x^2 phi_1`, which is handled in log space. For
//! each angle the `s` contour is rotated through the saddle of `phi_1`;
//! see `Integrand`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::Serialize;

use crate::exact::rat_to_f64;
use crate::expansion::{scaled_expansion, tail_expansion, TailExpansion};
use crate::kernels::{constants, h_scaled_polar, h_scaled_ray, AreaKind};
use crate::quadrature::CompositeRule;
use crate::{Error, Result};

/// Scaled abscissa at which [`Mode::Auto`] hands over to the expansion.
pub const EXPANSION_SWITCH: f64 = 3.0;

/// Scaled abscissa below which the accuracy target is relaxed.
pub const SMALL_X: f64 = 0.8;

/// Accuracy target used below [`SMALL_X`].
pub const SMALL_X_TOL: f64 = 1e-5;

/// Absolute accuracy accepted below [`SMALL_X`]. Far into the left tail the
/// angular integral converges only through a long oscillatory tail, and the
/// density itself is below anything double precision can resolve.
pub const SMALL_X_ABS_TOL: f64 = 1e-6;

/// Correction terms used by the expansion route.
const EXPANSION_TERMS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Quadrature below [`EXPANSION_SWITCH`], expansion above.
    Auto,
    ForceQuadrature,
    ForceExpansion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Execution {
    /// Angular nodes are spread over the rayon pool when the `parallel`
    /// feature is on; sequential otherwise.
    Parallel,
    Sequential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Quadrature,
    Expansion,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureConfig {
    /// Minimum number of angular panels before refinement.
    pub theta_panels: usize,
    /// Gauss-Legendre order of every panel.
    pub r_points_per_panel: usize,
    /// Upper limit of the angular range; `None` means the bound-derived cutoff.
    pub theta_cutoff: Option<f64>,
    /// Widens the radial window (1 keeps the default log-magnitude threshold).
    pub s_window_halfwidth: f64,
    pub target_rel_tol: f64,
    pub mode: Mode,
    pub execution: Execution,
    /// Integrate both halves of the angular range and report the imaginary residual.
    pub verify_symmetry: bool,
    pub max_refinements: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            theta_panels: 8,
            r_points_per_panel: 16,
            theta_cutoff: None,
            s_window_halfwidth: 1.0,
            target_rel_tol: 1e-9,
            mode: Mode::Auto,
            execution: Execution::Parallel,
            verify_symmetry: false,
            max_refinements: 4,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.theta_panels < 8 {
            return Err(Error::Domain(format!("theta_panels must be >= 8, got {}", self.theta_panels)));
        }
        if self.r_points_per_panel < 2 {
            return Err(Error::Domain("need at least 2 points per panel".into()));
        }
        if !(self.target_rel_tol > 0.0) || !(self.s_window_halfwidth > 0.0) {
            return Err(Error::Domain("tolerances must be positive".into()));
        }
        if let Some(c) = self.theta_cutoff {
            if !(c > 0.0 && c <= FRAC_PI_2) {
                return Err(Error::Domain(format!("theta cutoff {c} outside (0, pi/2]")));
            }
        }
        Ok(())
    }

    pub fn force_quadrature(mut self) -> Self {
        self.mode = Mode::ForceQuadrature;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.target_rel_tol = tol;
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Diagnostics {
    /// Saddle location `(s0, 0)` of the phase.
    pub saddle_s: Option<f64>,
    /// `xi / x^{8/3}` of the inversion contour.
    pub xi_scale: Option<f64>,
    pub theta_cutoff: Option<f64>,
    pub theta_nodes: usize,
    pub nodes: usize,
    pub refinements: usize,
    /// `|Im| / |Re|` of the full angular integral, when verified.
    pub imag_residual: Option<f64>,
    /// Number of density evaluations behind a derived quantity.
    pub density_evaluations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityResult {
    pub value: f64,
    pub est_error: f64,
    pub method: Method,
    pub diagnostics: Diagnostics,
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("x must be positive and finite, got {x}")))
    }
}

fn use_expansion(cfg: &QuadratureConfig, x: f64) -> bool {
    match cfg.mode {
        Mode::Auto => x >= EXPANSION_SWITCH,
        Mode::ForceQuadrature => false,
        Mode::ForceExpansion => true,
    }
}

fn cached_expansion(kind: AreaKind) -> &'static (TailExpansion, TailExpansion) {
    static CACHE: [OnceLock<(TailExpansion, TailExpansion)>; 7] = [const { OnceLock::new() }; 7];
    let idx = AreaKind::ALL.iter().position(|&k| k == kind).expect("listed kind");
    CACHE[idx].get_or_init(|| {
        // One extra term serves as the error estimate.
        let d = scaled_expansion(kind, EXPANSION_TERMS + 1).expect("expansion within the supported range");
        let t = tail_expansion(&d).expect("positive rate");
        (d, t)
    })
}

fn from_expansion(e: &TailExpansion, x: f64) -> DensityResult {
    let used = e.truncated(EXPANSION_TERMS + 1);
    let value = used.eval(x);
    let next = rat_to_f64(&e.corrections[EXPANSION_TERMS + 1]) * x.powi(-2 * (EXPANSION_TERMS as i32 + 1));
    DensityResult {
        value,
        est_error: (value * next / used.series_at(x)).abs(),
        method: Method::Expansion,
        diagnostics: Diagnostics::default(),
    }
}

/// The integrand after rotating the radial contour through its saddle.
///
/// With `p = rho sec(theta) e^{i theta}` and `s e^{i theta/2} = p^{3/4} gamma^{-1/2} w`,
/// the phase becomes `p - sqrt(gamma) p^{3/4} (w + 1/w)`, maximal in modulus
/// at `w = 1` on every angle. The rotation stays inside `|arg z| < pi/4` of
/// the kernel, clear of its poles on `arg z = pi/3`. `e^{x^2 m0}` is factored out.
struct Integrand {
    kind: AreaKind,
    x2: f64,
    x43: f64,
    rho: f64,
    sqrt_gamma: f64,
    gamma: f64,
    m0: f64,
    sec_pow: f64,
    /// Exponent of `w` including the `dw = w dt` Jacobian.
    w_pow: f64,
    kappa: f64,
}

impl Integrand {
    fn new(kind: AreaKind, x: f64, rho: f64) -> Self {
        let nu = kind.nu_f64();
        let gamma = kind.gamma_f64();
        Integrand {
            kind,
            x2: x * x,
            x43: x.powf(4.0 / 3.0),
            rho,
            sqrt_gamma: gamma.sqrt(),
            gamma,
            m0: rho - 2.0 * gamma.sqrt() * rho.powf(0.75),
            sec_pow: 3.5 - nu,
            w_pow: 2.0 * nu / 3.0 - 1.0,
            // e^{i(1 - 2nu/3) theta} times the phase of the rotated Jacobian.
            kappa: 1.0 - 2.0 * nu / 3.0 + (2.0 * nu / 3.0 - 1.0) / 4.0,
        }
    }

    /// `p^{3/4}` at angle `theta`.
    fn p34(&self, theta: f64) -> Complex64 {
        Complex64::from_polar((self.rho / theta.cos()).powf(0.75), 0.75 * theta)
    }

    /// Log-modulus at `w = 1`, relative to `theta = 0`.
    fn ridge(&self, theta: f64) -> f64 {
        let sec = 1.0 / theta.cos();
        let p34 = self.p34(theta);
        self.x2 * (self.rho - 2.0 * self.sqrt_gamma * p34.re - self.m0)
            + self.sec_pow * sec.ln()
            + self.w_pow * (p34.norm().ln() - self.rho.powf(0.75).ln())
    }

    /// Half-width in `t = ln w` of the region where the modulus stays above `level`
    /// (relative to the `theta = 0` peak).
    fn window(&self, theta: f64, level: f64) -> Option<f64> {
        let d = self.ridge(theta) - level;
        if d <= 0.0 {
            return None;
        }
        // Decay away from w = 1 is 2 k (cosh t - 1), less the drift of w^{w_pow}.
        let k = self.x2 * self.sqrt_gamma * self.p34(theta).re;
        let g = |t: f64| 2.0 * k * (t.cosh() - 1.0) - self.w_pow.abs() * t - d;
        let mut hi = 1.0;
        while g(hi) < 0.0 {
            hi *= 2.0;
        }
        let mut lo = 0.0;
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if g(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(hi)
    }

    /// `|d/dtheta log G|` at `w = 1`.
    fn theta_rate(&self, theta: f64) -> f64 {
        let (sin, cos) = theta.sin_cos();
        let tan = sin / cos;
        let i = Complex64::new(0.0, 1.0);
        let dp = i * self.rho / (cos * cos);
        let dp34 = self.p34(theta) * (0.75 * Complex64::new(tan, 1.0));
        (self.x2 * (dp - 2.0 * self.sqrt_gamma * dp34)).norm() + (self.sec_pow + self.w_pow.abs()) * tan.abs() + self.kappa.abs()
    }

    /// `|d/dt log G|` in `t = ln w`.
    fn w_rate(&self, t: f64, theta: f64) -> f64 {
        (self.x2 * self.sqrt_gamma * self.p34(theta) * (2.0 * t.sinh())).norm() + self.w_pow.abs() + 1.0
    }

    /// Integrand values at `w = e^t` on one angle, sharing the Airy sweep along the ray.
    fn eval_ray(&self, t: &[f64], theta: f64) -> Result<Vec<Complex64>> {
        let sec = 1.0 / theta.cos();
        // |z| at w = 1 is x^{4/3} |p|^{1/2} gamma^{-1/3}.
        let z1 = self.x43 * (self.rho * sec).sqrt() / self.gamma.cbrt();
        let radii: Vec<f64> = t.iter().map(|&t| z1 * (2.0 * t / 3.0).exp()).collect();
        let h = h_scaled_ray(self.kind, 0.5 * theta, &radii)?;
        let p = Complex64::new(self.rho, self.rho * theta.tan());
        let p34 = self.p34(theta);
        let base = (p - self.m0) * self.x2
            + Complex64::new(self.sec_pow * sec.ln() + self.w_pow * (p34.norm().ln() - self.rho.powf(0.75).ln()), self.kappa * theta);
        let c = self.x2 * self.sqrt_gamma * p34;
        Ok(t.iter()
            .zip(h)
            .map(|(&t, h)| h * (base - c * (2.0 * t.cosh()) + self.w_pow * t).exp())
            .collect())
    }

    /// Log of `Gamma(nu) rho^{5/2-nu} x^{3-2nu/3} e^{x^2 m0} |c_0|^{w_pow} / (4 pi^2)`
    /// with `|c_0| = rho^{3/4} gamma^{-1/2}`.
    fn log_prefactor(&self, x: f64) -> f64 {
        let nu = self.kind.nu_f64();
        let log_gamma_nu = gamma_of_nu(nu).ln();
        let log_c0 = 0.75 * self.rho.ln() - self.sqrt_gamma.ln();
        log_gamma_nu + (2.5 - nu) * self.rho.ln() + (3.0 - 2.0 * nu / 3.0) * x.ln() + self.x2 * self.m0 + self.w_pow * log_c0
            - (4.0 * PI * PI).ln()
    }
}

struct Layout {
    theta: CompositeRule,
    cutoff: f64,
}

fn theta_layout(f: &Integrand, x: f64, cfg: &QuadratureConfig, log_tol: f64, level: usize) -> Layout {
    // The modulus is not monotone in theta for small x, so scan tan(theta)
    // geometrically for the last angle above the threshold, then bisect.
    let above = |t: f64| f.ridge(t) >= log_tol;
    let mut lo = 0.0;
    let mut hi = FRAC_PI_2;
    let mut u = 1e-3f64;
    while u < 1e15 {
        let t = u.atan();
        if above(t) {
            lo = t;
            hi = (1.25 * u).atan();
        }
        u *= 1.25;
    }
    let mut cutoff = if hi >= FRAC_PI_2 {
        FRAC_PI_2 * (1.0 - 1e-15)
    } else {
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if above(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        hi
    };
    if let Some(c) = cfg.theta_cutoff {
        cutoff = cutoff.min(c);
    }
    // Panels no wider than the Gaussian scale ~1/x, and narrow enough that
    // the phase turns by at most `budget` radians across each.
    let shrink = REFINE.powi(level as i32);
    let budget = PHASE_BUDGET / shrink;
    let max_w = (2.0 / x).min(cutoff / cfg.theta_panels as f64) / shrink;
    let edges = march(0.0, cutoff, budget, max_w, |t| f.theta_rate(t));
    Layout {
        theta: CompositeRule::new(&edges, 1, cfg.r_points_per_panel),
        cutoff,
    }
}

/// Phase turned across one Gauss-Legendre panel at refinement level 0.
const PHASE_BUDGET: f64 = 12.0;

/// Widest radial panel in `ln w` at refinement level 0.
const W_PANEL: f64 = 0.75;

/// Extra depth of the log-modulus threshold, below `ln tol`, at which the
/// integration domain is truncated at level 0.
const TRUNCATION_MARGIN: f64 = 12.0;

/// Panel shrink factor per refinement level.
const REFINE: f64 = 1.25;

/// Panel edges on `[a, b]` with `width * rate <= budget` and `width <= max_w`.
fn march(a: f64, b: f64, budget: f64, max_w: f64, rate: impl Fn(f64) -> f64) -> Vec<f64> {
    let min_w = (b - a) * 1e-6;
    let mut edges = vec![a];
    let mut t = a;
    while t < b {
        let mut w = (budget / rate(t)).min(max_w).max(min_w);
        // Shrink gradually until the far end also respects the budget.
        loop {
            let r1 = rate((t + w).min(b));
            if w * r1 <= budget || w <= min_w {
                break;
            }
            w = (0.5 * w).max(0.9 * budget / r1).max(min_w);
        }
        t = if b - (t + w) < 0.25 * w { b } else { t + w };
        edges.push(t);
    }
    edges
}

/// One pass of the double integral at a fixed refinement level.
struct Pass {
    /// Integral over `theta >= 0`.
    plus: Complex64,
    /// Integral over `theta <= 0`, when symmetry is verified.
    minus: Option<Complex64>,
    /// Integral of the modulus, which sets the rounding floor.
    l1: f64,
    layout: Layout,
    nodes: usize,
}

fn integrate_once(f: &Integrand, x: f64, cfg: &QuadratureConfig, log_tol: f64, level: usize) -> Result<Pass> {
    let layout = theta_layout(f, x, cfg, log_tol, level);
    let order = cfg.r_points_per_panel;
    let shrink = REFINE.powi(level as i32);
    let budget = PHASE_BUDGET / shrink;
    let inner = |theta: f64| -> Result<(Complex64, Complex64, f64, usize)> {
        let Some(half) = f.window(theta, log_tol) else {
            return Ok((Complex64::default(), Complex64::default(), 0.0, 0));
        };
        let edges = march(-half, half, budget, W_PANEL / shrink, |t| f.w_rate(t, theta));
        let rule = CompositeRule::new(&edges, 1, order);
        let vals = f.eval_ray(&rule.nodes, theta)?;
        let plus: Complex64 = vals.iter().zip(&rule.weights).map(|(v, &w)| v * w).sum();
        let l1: f64 = vals.iter().zip(&rule.weights).map(|(v, &w)| v.norm() * w).sum();
        let minus = if cfg.verify_symmetry {
            f.eval_ray(&rule.nodes, -theta)?.iter().zip(&rule.weights).map(|(v, &w)| v * w).sum()
        } else {
            Complex64::default()
        };
        Ok((plus, minus, l1, rule.len()))
    };
    let thetas: Vec<(f64, f64)> = layout.theta.nodes.iter().copied().zip(layout.theta.weights.iter().copied()).collect();
    let parts: Vec<Result<(Complex64, Complex64, f64, usize)>> = match cfg.execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            thetas.par_iter().map(|&(t, _)| inner(t)).collect()
        }
        _ => thetas.iter().map(|&(t, _)| inner(t)).collect(),
    };
    // Summation in node order keeps the result independent of scheduling.
    let mut plus = Complex64::default();
    let mut minus = Complex64::default();
    let mut l1 = 0.0;
    let mut nodes = 0;
    for (part, &(_, w)) in parts.into_iter().zip(&thetas) {
        let (p, m, a, n) = part?;
        plus += p * w;
        minus += m * w;
        l1 += a * w;
        nodes += n;
    }
    Ok(Pass {
        plus,
        minus: cfg.verify_symmetry.then_some(minus),
        l1,
        layout,
        nodes,
    })
}

/// Rounding floor relative to the integral of the modulus.
const CANCELLATION_FLOOR: f64 = 256.0 * f64::EPSILON;

fn quadrature_at_scale(kind: AreaKind, x: f64, rho: f64, tol: f64, abs_tol: f64, cfg: &QuadratureConfig) -> Result<DensityResult> {
    let f = Integrand::new(kind, x, rho);
    let scale = f.log_prefactor(x).exp();
    let mut previous: Option<f64> = None;
    let mut diag = Diagnostics {
        saddle_s: Some(f.rho.powf(0.75) / f.sqrt_gamma),
        xi_scale: Some(rho),
        ..Diagnostics::default()
    };
    let mut achieved = f64::INFINITY;
    for level in 0..=cfg.max_refinements {
        // Each level also deepens the truncation threshold, so window
        // truncation shows up in the level-to-level difference.
        let log_tol = tol.ln() - TRUNCATION_MARGIN * cfg.s_window_halfwidth - 3.0 * level as f64;
        let pass = integrate_once(&f, x, cfg, log_tol, level)?;
        let (value, residual) = match pass.minus {
            Some(m) => {
                let total = (pass.plus + m) / Complex64::new(0.0, 1.0) * scale;
                (total.re, Some(total.im.abs() / total.re.abs()))
            }
            None => (2.0 * pass.plus.im * scale, None),
        };
        let floor = 2.0 * CANCELLATION_FLOOR * pass.l1 * scale;
        diag.theta_cutoff = Some(pass.layout.cutoff);
        diag.theta_nodes = pass.layout.theta.len();
        diag.nodes = pass.nodes;
        diag.refinements = level;
        diag.imag_residual = residual;
        if let Some(p) = previous {
            let diff = (value - p).abs();
            // Below the floor, the value is only known to be negligible.
            if diff <= (tol * value.abs()).max(floor).max(abs_tol) {
                return Ok(DensityResult {
                    value,
                    est_error: diff.max(floor),
                    method: Method::Quadrature,
                    diagnostics: diag,
                });
            }
            achieved = diff / value.abs();
        }
        previous = Some(value);
    }
    Err(Error::ToleranceNotMet { achieved, target: tol })
}

/// Density of `sqrt(2) B` at `x`.
pub fn density_scaled(kind: AreaKind, x: f64, cfg: &QuadratureConfig) -> Result<DensityResult> {
    check_x(x)?;
    cfg.validate()?;
    if use_expansion(cfg, x) {
        return Ok(from_expansion(&cached_expansion(kind).0, x));
    }
    let rho = rat_to_f64(&constants(kind).rho);
    if x < SMALL_X {
        return quadrature_at_scale(kind, x, rho, cfg.target_rel_tol.max(SMALL_X_TOL), SMALL_X_ABS_TOL, cfg);
    }
    quadrature_at_scale(kind, x, rho, cfg.target_rel_tol, 0.0, cfg)
}

/// [`density_scaled`] at an explicit scale `xi = rho x^{8/3}`.
pub fn density_scaled_at_scale(kind: AreaKind, x: f64, rho: f64, cfg: &QuadratureConfig) -> Result<DensityResult> {
    check_x(x)?;
    cfg.validate()?;
    if !(rho > 0.0) {
        return Err(Error::Domain(format!("scale must be positive, got {rho}")));
    }
    quadrature_at_scale(kind, x, rho, cfg.target_rel_tol, 0.0, cfg)
}

/// Density of the area `B` itself: `f(x) = sqrt(2) f_scaled(sqrt(2) x)`.
pub fn density(kind: AreaKind, x: f64, cfg: &QuadratureConfig) -> Result<DensityResult> {
    check_x(x)?;
    let mut r = density_scaled(kind, std::f64::consts::SQRT_2 * x, cfg)?;
    r.value *= std::f64::consts::SQRT_2;
    r.est_error *= std::f64::consts::SQRT_2;
    Ok(r)
}

/// Gauss-Legendre points per panel of the tail integral.
const TAIL_POINTS: usize = 8;

/// `P(sqrt(2) B > x)`.
pub fn tail_probability_scaled(kind: AreaKind, x: f64, cfg: &QuadratureConfig) -> Result<DensityResult> {
    check_x(x)?;
    cfg.validate()?;
    if use_expansion(cfg, x) {
        return Ok(from_expansion(&cached_expansion(kind).1, x));
    }
    // y = sqrt(x^2 + w / b) turns the Gaussian decay into e^{-w}.
    let b = rat_to_f64(&constants(kind).b);
    let edges = [0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 28.0, 45.0];
    let rule = CompositeRule::new(&edges, 1, TAIL_POINTS);
    let mut value = 0.0;
    let mut err = 0.0;
    let mut evals = 0;
    for (&w, &wt) in rule.nodes.iter().zip(&rule.weights) {
        let y = (x * x + w / b).sqrt();
        let d = density_scaled(kind, y, cfg)?;
        let jac = 1.0 / (2.0 * b * y);
        value += wt * jac * d.value;
        err += wt * jac * d.est_error;
        evals += 1;
    }
    // Mass beyond w = 45 is below e^{-45} of the density scale at x.
    Ok(DensityResult {
        value,
        est_error: err,
        method: Method::Quadrature,
        diagnostics: Diagnostics {
            density_evaluations: evals,
            ..Diagnostics::default()
        },
    })
}

/// `P(B > x)`.
pub fn tail_probability(kind: AreaKind, x: f64, cfg: &QuadratureConfig) -> Result<DensityResult> {
    check_x(x)?;
    tail_probability_scaled(kind, std::f64::consts::SQRT_2 * x, cfg)
}

/// Which single-integral representation [`g_mixture`] uses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GRoute {
    /// Along the positive real axis.
    Real,
    /// Along the ray `arg = phi`, `|phi| < pi/6`.
    Rotated(f64),
}

/// Density at `x` of `T^{3/2} X` with `T ~ Gamma(nu)` independent of `X = sqrt(2) B`.
pub fn g_mixture(kind: AreaKind, x: f64, route: GRoute, cfg: &QuadratureConfig) -> Result<f64> {
    check_x(x)?;
    cfg.validate()?;
    let phi = match route {
        GRoute::Real => 0.0,
        GRoute::Rotated(p) => {
            if p.abs() >= PI / 6.0 {
                return Err(Error::Sector {
                    z: Complex64::from_polar(1.0, p),
                    limit: PI / 6.0,
                });
            }
            p
        }
    };
    let nu = kind.nu_f64();
    let gamma = kind.gamma_f64();
    let c = (1.5 * phi).cos();
    // |integrand| ~ exp(-c x r^{-3/2} - c gamma r^{3/2}); the window keeps
    // everything above tol * e^{-12} relative to the peak.
    let log_peak = -2.0 * c * (x * gamma).sqrt();
    let rot_x = Complex64::from_polar(x, -1.5 * phi);
    let integrand = |t: f64| -> Result<Complex64> {
        let r = t.exp();
        let r32 = r.powf(1.5);
        let h = h_scaled_polar(kind, r, phi)?;
        let expo = -rot_x / r32 - Complex64::from_polar(gamma * r32, 1.5 * phi) + Complex64::new((nu - 1.5) * t, 0.0);
        Ok(h * (expo - log_peak).exp())
    };
    let tol = cfg.target_rel_tol;
    let cut = tol.ln() - 12.0;
    // Solve c x r^{-3/2} + c gamma r^{3/2} - (-log_peak) = -cut for the end points.
    let k = -cut - log_peak;
    let disc = (k * k - 4.0 * c * c * x * gamma).max(0.0).sqrt();
    let hi32 = (k + disc) / (2.0 * c * gamma);
    let lo32 = x / (gamma * hi32);
    let (tlo, thi) = (lo32.ln() / 1.5, hi32.ln() / 1.5);
    let mut previous: Option<Complex64> = None;
    for level in 0..=cfg.max_refinements + 2 {
        let panels = (((thi - tlo) / 0.5).ceil() as usize).max(2) << level;
        let rule = CompositeRule::uniform(tlo, thi, panels, cfg.r_points_per_panel);
        let mut acc = Complex64::default();
        for (&t, &w) in rule.nodes.iter().zip(&rule.weights) {
            acc += integrand(t)? * w;
        }
        let total = acc * Complex64::from_polar(1.0, (nu - 1.5) * phi) * log_peak.exp() * 3.0 / (4.0 * PI) / Complex64::new(0.0, 1.0);
        if let Some(p) = previous {
            if (total - p).norm() <= tol * total.norm() {
                return Ok(total.re);
            }
        }
        previous = Some(total);
    }
    Err(Error::ToleranceNotMet {
        achieved: f64::NAN,
        target: tol,
    })
}

/// Gauss-Legendre points per panel of the mixing integral in [`g_from_density`].
const MIXTURE_POINTS: usize = 8;

/// The same density as [`g_mixture`], by mixing [`density_scaled`] over `T`,
/// at several abscissae sharing one grid of densities.
pub fn g_from_density(kind: AreaKind, xs: &[f64], cfg: &QuadratureConfig) -> Result<Vec<DensityResult>> {
    for &x in xs {
        check_x(x)?;
    }
    // With y the argument of f:
    // g(x) = 2 / (3 Gamma(nu)) x^{-1} int (x/y)^{2 nu/3} e^{-(x/y)^{2/3}} f(y) dy.
    let nu = kind.nu_f64();
    let edges = [0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.4, 1.8, 2.3, 3.0, 4.0, 5.5];
    let rule = CompositeRule::new(&edges, 1, MIXTURE_POINTS);
    let densities = rule
        .nodes
        .iter()
        .map(|&y| density_scaled(kind, y, cfg))
        .collect::<Result<Vec<_>>>()?;
    let gamma_nu = gamma_of_nu(nu);
    Ok(xs
        .iter()
        .map(|&x| {
            let mut value = 0.0;
            let mut err = 0.0;
            for ((&y, &w), d) in rule.nodes.iter().zip(&rule.weights).zip(&densities) {
                let ratio = x / y;
                let weight = 2.0 / (3.0 * gamma_nu * x) * ratio.powf(2.0 * nu / 3.0) * (-ratio.powf(2.0 / 3.0)).exp();
                value += w * weight * d.value;
                err += w * weight * d.est_error;
            }
            DensityResult {
                value,
                est_error: err,
                method: Method::Quadrature,
                diagnostics: Diagnostics {
                    density_evaluations: rule.len(),
                    ..Diagnostics::default()
                },
            }
        })
        .collect())
}

/// `Gamma(nu)` for the two orders that occur, 1/2 and 1.
fn gamma_of_nu(nu: f64) -> f64 {
    if nu == 1.0 {
        1.0
    } else {
        PI.sqrt()
    }
}
