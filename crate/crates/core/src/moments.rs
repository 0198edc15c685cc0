//! Moments of the areas: the exact excursion recursion, Stirling-type
//! asymptotics from the density expansions, and moments of the numerically
//! inverted densities.

use std::f64::consts::{E, PI, SQRT_2};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::exact::{factorial, gamma_symbolic, q, rat_to_f64, SymbolicConstant};
use crate::expansion::density_expansion;
use crate::inversion::{density, QuadratureConfig};
use crate::kernels::AreaKind;
use crate::quadrature::CompositeRule;
use crate::{Error, Result};

/// `K_0, ..., K_n` from `K_n = (3n-4)/4 K_{n-1} + sum_{j=1}^{n-1} K_j K_{n-j}`, `K_0 = -1/2`.
pub fn takacs_k_table(n: usize) -> Vec<BigRational> {
    let mut k = Vec::with_capacity(n + 1);
    k.push(q(-1, 2));
    for m in 1..=n {
        let mut v = q(3 * m as i64 - 4, 4) * &k[m - 1];
        for j in 1..m {
            v += &k[j] * &k[m - j];
        }
        k.push(v);
    }
    k
}

pub fn takacs_k(n: usize) -> BigRational {
    takacs_k_table(n).pop().expect("table is never empty")
}

/// `K_n / ((2 pi)^{-1} (3/4)^n (n-1)!)`, which tends to 1.
pub fn takacs_ratio(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("the ratio needs n >= 1".into()));
    }
    let scale = BigRational::new(BigInt::from(4).pow(n as u32), BigInt::from(3).pow(n as u32) * factorial(n as u64 - 1));
    Ok(2.0 * PI * rat_to_f64(&(takacs_k(n) * scale)))
}

/// `E B_ex^n = 4 sqrt(pi) 2^{-n/2} n! / Gamma((3n-1)/2) K_n`, exactly.
pub fn excursion_moment(n: usize) -> Result<SymbolicConstant> {
    if n == 0 {
        return Err(Error::Domain("excursion moments are indexed from n = 1".into()));
    }
    let n_i32 = i32::try_from(n).map_err(|_| Error::Domain(format!("n = {n} is too large")))?;
    let gamma = gamma_symbolic(&q(3 * n as i64 - 1, 2)).expect("half-integer argument");
    let coeff = BigRational::from_integer(factorial(n as u64) * 4) * takacs_k(n);
    Ok(SymbolicConstant::from_parts(coeff, -n_i32, 0, 1).div(&gamma))
}

/// Leading constant `C` in `E X^n ~ C n^{alpha/2} (n / (2 e b))^{n/2}`,
/// namely `a sqrt(pi) (2b)^{-(alpha+1)/2}` for a density `a x^alpha e^{-b x^2}`.
pub fn moment_constant(kind: AreaKind) -> Result<SymbolicConstant> {
    let d = density_expansion(kind, 0)?;
    let two_b = &d.b * q(2, 1);
    let power = -(&d.alpha + BigRational::one()) / q(2, 1);
    let factor = SymbolicConstant::rational_pow(&two_b, &power)
        .ok_or_else(|| Error::Unsupported(format!("{kind}: moment constant leaves the symbolic ring")))?;
    Ok(d.prefactor.mul(&SymbolicConstant::sqrt_pi()).mul(&factor))
}

/// Coefficient `c` of the first correction `(1 + c/n)` to the leading moment
/// asymptotics: `(alpha^2 - 1)/4 + 1/6 + 2 b a_2 / a_0`.
pub fn moment_correction(kind: AreaKind) -> Result<BigRational> {
    let d = density_expansion(kind, 1)?;
    let a = &d.alpha;
    Ok((a * a - BigRational::one()) / q(4, 1) + q(1, 6) + q(2, 1) * &d.b * &d.corrections[1])
}

/// Stirling-type asymptotic value of `E X^n`. The refined form with the
/// `(1 + c/n)` factor is offered for the excursion only.
pub fn moment_asymptotic(kind: AreaKind, n: usize, refined: bool) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("moment asymptotics need n >= 1".into()));
    }
    if refined && kind != AreaKind::Excursion {
        return Err(Error::Unsupported(format!("refined moment asymptotics are only provided for the excursion, not {kind}")));
    }
    let d = density_expansion(kind, 0)?;
    let alpha = rat_to_f64(&d.alpha);
    let b = rat_to_f64(&d.b);
    let nf = n as f64;
    let log = moment_constant(kind)?.to_f64().ln() + 0.5 * alpha * nf.ln() + 0.5 * nf * (nf / (2.0 * E * b)).ln();
    let mut v = log.exp();
    if refined {
        v *= 1.0 + rat_to_f64(&moment_correction(kind)?) / nf;
    }
    Ok(v)
}

/// A value with an error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub value: f64,
    pub est_error: f64,
}

/// Panel edges of the density grid on `[0.05, 6]`. The edge at `3/sqrt 2`
/// is where [`crate::inversion::Mode::Auto`] switches to the expansion.
pub const GRID_EDGES: [f64; 14] = [
    0.05, 0.1, 0.17, 0.25, 0.35, 0.5, 0.7, 0.95, 1.25, 1.65, 3.0 / SQRT_2, 3.0, 4.5, 6.0,
];

/// Gauss-Legendre points per panel of the density grid. At this order the
/// discretization error is far below the density errors, so `est_error`
/// carries only the latter and the mass deficit.
pub const GRID_POINTS: usize = 7;

/// Points per panel of the inversion when a grid node misses its accuracy
/// target at the cheaper setting; happens only deep in the left tail.
const FALLBACK_POINTS: usize = 16;

/// Lower end of the integration range.
pub const GRID_LOWER: f64 = 0.05;

/// The density of one area on a fixed quadrature grid over `[0.05, 6]`,
/// shared by the mass and all moments.
#[derive(Debug, Clone)]
pub struct DensityGrid {
    pub kind: AreaKind,
    rule: CompositeRule,
    values: Vec<f64>,
    errors: Vec<f64>,
}

impl DensityGrid {
    pub fn new(kind: AreaKind, cfg: &QuadratureConfig) -> Result<Self> {
        let rule = CompositeRule::new(&GRID_EDGES, 1, GRID_POINTS);
        let mut values = Vec::with_capacity(rule.len());
        let mut errors = Vec::with_capacity(rule.len());
        let fallback = QuadratureConfig {
            r_points_per_panel: cfg.r_points_per_panel.max(FALLBACK_POINTS),
            ..cfg.clone()
        };
        for &x in &rule.nodes {
            let d = match density(kind, x, cfg) {
                Err(Error::ToleranceNotMet { .. }) => density(kind, x, &fallback)?,
                other => other?,
            };
            values.push(d.value);
            errors.push(d.est_error);
        }
        Ok(DensityGrid { kind, rule, values, errors })
    }

    /// Accuracy settings used for the grid: a lower Gauss-Legendre order in
    /// the inversion and a 1e-7 target are ample for integrated quantities.
    pub fn default_config() -> QuadratureConfig {
        QuadratureConfig {
            r_points_per_panel: 8,
            ..QuadratureConfig::default()
        }
        .with_tol(1e-7)
    }

    pub fn evaluations(&self) -> usize {
        self.rule.len()
    }

    fn weighted(&self, n: i32) -> Estimate {
        let mut value = 0.0;
        let mut est_error = 0.0;
        for ((&x, &w), (&f, &e)) in self.rule.nodes.iter().zip(&self.rule.weights).zip(self.values.iter().zip(&self.errors)) {
            let xn = x.powi(n);
            value += w * xn * f;
            est_error += w * xn * e;
        }
        Estimate { value, est_error }
    }

    /// `int_{0.05}^{6} f`.
    pub fn mass(&self) -> Estimate {
        self.weighted(0)
    }

    /// `int_{0.05}^{6} x^n f`, plus the mass-deficit bound `0.05^n (1 - mass)`
    /// on the part below the grid in the error.
    pub fn moment(&self, n: u32) -> Estimate {
        let n = n as i32;
        let mass = self.mass();
        let mut m = self.weighted(n);
        m.est_error += GRID_LOWER.powi(n) * (1.0 - mass.value + mass.est_error).max(0.0);
        m
    }
}

/// `E X^n` from the numerically inverted density, for `1 <= n <= 6`.
pub fn moment_from_density(kind: AreaKind, n: u32, cfg: &QuadratureConfig) -> Result<Estimate> {
    if !(1..=6).contains(&n) {
        return Err(Error::Domain(format!("numeric moments are offered for 1 <= n <= 6, got {n}")));
    }
    Ok(DensityGrid::new(kind, cfg)?.moment(n))
}

/// An exact value: its closed form and its float.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactValue {
    pub symbolic: String,
    pub value: f64,
    pub exact: bool,
}

impl From<&SymbolicConstant> for ExactValue {
    fn from(c: &SymbolicConstant) -> Self {
        ExactValue {
            symbolic: c.to_string(),
            value: c.to_f64(),
            exact: true,
        }
    }
}

/// Everything known about one moment.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentRecord {
    pub kind: AreaKind,
    pub n: usize,
    /// Closed form, excursion only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactValue>,
    /// Leading asymptotics; the error is the size of the first correction.
    pub asymptotic: Estimate,
    /// With the first correction (excursion only); the error is `value / n^2`,
    /// the order of the omitted term.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refined: Option<Estimate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<Estimate>,
}

/// Collects everything known about `E X^n`; `grid` supplies the numeric value.
pub fn moment_record(kind: AreaKind, n: usize, grid: Option<&DensityGrid>) -> Result<MomentRecord> {
    let exact = if kind == AreaKind::Excursion {
        Some(ExactValue::from(&excursion_moment(n)?))
    } else {
        None
    };
    let numeric = match grid {
        Some(g) if g.kind != kind => return Err(Error::Domain(format!("grid belongs to {}, not {kind}", g.kind))),
        Some(g) => {
            let m = n
                .to_u32()
                .filter(|m| (1..=6).contains(m))
                .ok_or_else(|| Error::Domain(format!("numeric moments are offered for 1 <= n <= 6, got {n}")))?;
            Some(g.moment(m))
        }
        None => None,
    };
    let lead = moment_asymptotic(kind, n, false)?;
    let c = rat_to_f64(&moment_correction(kind)?);
    let nf = n as f64;
    let refined = if kind == AreaKind::Excursion {
        let v = moment_asymptotic(kind, n, true)?;
        Some(Estimate {
            value: v,
            est_error: v.abs() / (nf * nf),
        })
    } else {
        None
    };
    Ok(MomentRecord {
        kind,
        n,
        exact,
        asymptotic: Estimate {
            value: lead,
            est_error: (lead * c / nf).abs(),
        },
        refined,
        numeric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_recursion_steps() {
        let k = takacs_k_table(3);
        assert_eq!(k[0], q(-1, 2));
        assert_eq!(k[1], q(1, 8));
        // (2/4)(1/8) + (1/8)^2
        assert_eq!(k[2], q(5, 64));
    }

    #[test]
    fn first_excursion_moment_is_sqrt_pi_over_8() {
        let m = excursion_moment(1).unwrap();
        assert_eq!(m, SymbolicConstant::from_parts(q(1, 4), 1, 0, 1));
        assert!((m.to_f64() - (PI / 8.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn refined_correction_of_excursion() {
        assert_eq!(moment_correction(AreaKind::Excursion).unwrap(), q(-5, 12));
        assert!(moment_asymptotic(AreaKind::Bridge, 3, true).is_err());
    }
}
