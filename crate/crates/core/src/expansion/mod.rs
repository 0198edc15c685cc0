//! Exact asymptotic expansions of the densities and tails.
//!
//! The scaled density is written as a double integral over `(s, theta)` with
//! a saddle at `(s0, 0)`. Substituting `s = s0 (1 + u/x)`, `theta = 2v/x`
//! turns both the amplitude and the phase into series in `1/x` with
//! polynomial coefficients in `(u, v)`; integrating those against the
//! complex Gaussian weight gives the correction coefficients.

pub mod bivariate;
pub mod gaussian;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::exact::{gamma_symbolic, q, rat_string, rat_to_f64, FormalSeries, Qi, SeriesVar, SymbolicConstant};
use crate::kernels::{constants, hhat_series, AreaConstants, AreaKind};
use crate::{Error, Result};

pub use bivariate::{BivariateSeries, Poly2};
pub use gaussian::{gaussian_moment, gaussian_normalization, GaussianMoment, MomentTable};

/// Largest number of correction terms the engine is exercised with.
pub const MAX_TERMS: usize = 6;

/// What an expansion describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    /// Density of `sqrt(2) B`.
    ScaledDensity,
    /// Tail probability of `sqrt(2) B`.
    ScaledTail,
    Density,
    Tail,
}

/// `prefactor * x^alpha * exp(-b x^2) * sum_k corrections[k] x^{-2k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TailExpansion {
    pub kind: AreaKind,
    pub quantity: Quantity,
    pub alpha: BigRational,
    pub b: BigRational,
    pub prefactor: SymbolicConstant,
    pub corrections: Vec<BigRational>,
}

impl TailExpansion {
    pub fn terms(&self) -> usize {
        self.corrections.len()
    }

    /// Keeps the first `n` corrections.
    pub fn truncated(&self, n: usize) -> TailExpansion {
        let mut out = self.clone();
        out.corrections.truncate(n.max(1));
        out
    }

    /// The bracketed series `sum_k c_k x^{-2k}`.
    pub fn series_at(&self, x: f64) -> f64 {
        let y = 1.0 / (x * x);
        self.corrections.iter().rev().fold(0.0, |acc, c| acc * y + rat_to_f64(c))
    }

    /// Numerical value of the truncated expansion.
    pub fn eval(&self, x: f64) -> f64 {
        self.eval_log(x).exp()
    }

    /// Logarithm of [`Self::eval`]; finite far beyond the underflow point of `eval`.
    pub fn eval_log(&self, x: f64) -> f64 {
        self.prefactor.to_f64().ln() + rat_to_f64(&self.alpha) * x.ln() - rat_to_f64(&self.b) * x * x + self.series_at(x).ln()
    }

    pub fn record(&self) -> ExpansionRecord {
        ExpansionRecord {
            kind: self.kind,
            quantity: self.quantity,
            prefactor: self.prefactor.to_string(),
            prefactor_value: self.prefactor.to_f64(),
            alpha: rat_string(&self.alpha),
            rate: rat_string(&self.b),
            corrections: self.corrections.iter().map(rat_string).collect(),
            formula: self.to_string(),
        }
    }
}

impl TailExpansion {
    /// The leading term as a formula, e.g. `6*sqrt(6)/sqrt(pi)*x*exp(-6*x^2)`.
    pub fn leading_term(&self) -> String {
        let mut s = self.prefactor.to_string();
        if !self.alpha.is_zero() {
            if self.alpha.is_one() {
                s.push_str("*x");
            } else {
                s.push_str(&format!("*x^{}", paren_if_fraction(&self.alpha)));
            }
        }
        s.push_str(&format!("*exp(-{}*x^2)", rat_string(&self.b)));
        s
    }
}

impl fmt::Display for TailExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*(1", self.leading_term())?;
        for (k, c) in self.corrections.iter().enumerate().skip(1) {
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, " {sign} {}*x^-{}", rat_string(&c.abs()), 2 * k)?;
        }
        write!(f, " + ...)")
    }
}

fn paren_if_fraction(r: &BigRational) -> String {
    if r.is_integer() && !r.is_negative() {
        rat_string(r)
    } else {
        format!("({})", rat_string(r))
    }
}

/// Serializable form with every exact quantity as a string.
#[derive(Debug, Clone, Serialize)]
pub struct ExpansionRecord {
    pub kind: AreaKind,
    pub quantity: Quantity,
    pub prefactor: String,
    pub prefactor_value: f64,
    pub alpha: String,
    pub rate: String,
    pub corrections: Vec<String>,
    pub formula: String,
}

fn angle(coeffs: Vec<Qi>) -> FormalSeries<Qi> {
    FormalSeries::new(SeriesVar::Theta, coeffs)
}

/// `exp(i a theta)`.
fn exp_i(a: &BigRational, order: usize) -> FormalSeries<Qi> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Qi::one();
    let ia = Qi::new(BigRational::zero(), a.clone());
    for k in 0..=order {
        coeffs.push(term.clone());
        term = term.mul_ref(&ia).scale(&q(1, k as i64 + 1));
    }
    angle(coeffs)
}

/// `sec(theta)^a`.
fn sec_pow(a: &BigRational, order: usize) -> FormalSeries<Qi> {
    let cos: Vec<Qi> = (0..=order)
        .map(|k| {
            if k % 2 == 1 {
                return Qi::zero();
            }
            let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
            Qi::real(BigRational::new(BigInt::from(sign), crate::exact::factorial(k as u64)))
        })
        .collect();
    angle(cos).pow_rational(&-a).expect("cos starts at 1")
}

/// `tan(theta)`.
fn tan(order: usize) -> FormalSeries<Qi> {
    let sin: Vec<Qi> = (0..=order)
        .map(|k| {
            if k % 2 == 0 {
                return Qi::zero();
            }
            let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
            Qi::real(BigRational::new(BigInt::from(sign), crate::exact::factorial(k as u64)))
        })
        .collect();
    angle(sin).mul(&sec_pow(&BigRational::one(), order))
}

fn real(r: &BigRational) -> Qi {
    Qi::real(r.clone())
}

/// The phase `phi_1(s, theta)` after `s = s0(1 + u eps)`, `theta = 2 v eps`.
pub fn phi1_series(kind: AreaKind, order: usize) -> Result<BivariateSeries> {
    if order < 2 {
        return Err(Error::Domain(format!("phase expansion needs order >= 2, got {order}")));
    }
    Ok(phi1_with(&constants(kind), order))
}

fn phi1_with(c: &AreaConstants, order: usize) -> BivariateSeries {
    let rho_32 = {
        let r = &c.gamma * q(9, 4);
        &r * &r * &r
    };
    let one_i_tan = {
        let t = tan(order).scale(&Qi::i());
        let mut coeffs = t.coeffs().to_vec();
        coeffs[0] = Qi::one();
        angle(coeffs)
    };
    let first = BivariateSeries::from_angle(&one_i_tan, order).scale(&real(&c.rho));
    let second = BivariateSeries::from_angle(&exp_i(&q(1, 1), order).mul(&sec_pow(&q(3, 2), order)), order)
        .mul(&BivariateSeries::one_plus_u_pow(&q(-1, 1), order))
        .scale(&real(&-(rho_32 / &c.s0)));
    let third = BivariateSeries::from_angle(&exp_i(&q(1, 2), order), order)
        .mul(&BivariateSeries::one_plus_u_pow(&q(1, 1), order))
        .scale(&real(&-(&c.gamma * &c.s0)));
    first.add(&second).add(&third)
}

/// `d phi_1 / d theta` at the saddle `(s0, 0)`; zero exactly when the saddle is genuine.
pub fn saddle_gradient(kind: AreaKind) -> Qi {
    // With u = 0 the eps^1 coefficient is 2 v times the theta-derivative.
    let phi = phi1_with(&constants(kind), 2);
    phi.coeff(1).coeff(0, 1).scale(&q(1, 2))
}

/// Raw coefficients `C_0..C_order` of the scaled density's correction
/// series in `1/x`, before any vanishing checks.
pub fn collected_coefficients(kind: AreaKind, order: usize) -> Result<Vec<Qi>> {
    let c = constants(kind);
    let m = order;
    let phi = phi1_with(&c, m + 2);

    let quad = Poly2::monomial(real(&(-&c.b * q(2, 1))), 2, 0);
    let mut expected = quad;
    expected.add_assign(&Poly2::monomial(Qi::new(BigRational::zero(), &c.b * q(2, 1)), 1, 1));
    expected.add_assign(&Poly2::monomial(real(&-&c.b), 0, 2));
    if phi.coeff(0) != &Poly2::constant(real(&-&c.b)) || !phi.coeff(1).is_zero() || phi.coeff(2) != &expected {
        return Err(Error::Consistency(format!("{kind}: phase is not stationary at the saddle")));
    }

    let remainder = BivariateSeries::new((0..=m).map(|j| if j == 0 { Poly2::zero() } else { phi.coeff(j + 2).clone() }).collect());
    let e = remainder.exp().expect("remainder has no constant term");

    let q_pow = &c.nu * q(2, 3) - q(2, 1) + &c.lead_power * q(2, 3);
    let kappa = BigRational::one() - &c.nu * q(2, 3) + &c.lead_power * q(1, 3);
    let sec_exp = q(7, 2) - &c.nu;
    let outer = BivariateSeries::from_angle(&exp_i(&kappa, m).mul(&sec_pow(&sec_exp, m)), m);
    let hhat = hhat_series(kind, (m / 2).max(1))?;
    let mut inner: Option<BivariateSeries> = None;
    let mut s0_pow = BigRational::one();
    for k in 0..=(m / 2) {
        let dk = hhat.coeff(k) * &s0_pow;
        s0_pow /= &c.s0;
        if dk.is_zero() {
            continue;
        }
        let term = BivariateSeries::one_plus_u_pow(&(&q_pow - q(k as i64, 1)), m)
            .mul(&BivariateSeries::from_angle(&exp_i(&q(-(k as i64), 2), m), m))
            .scale(&real(&dk))
            .shift(2 * k);
        inner = Some(match inner {
            Some(acc) => acc.add(&term),
            None => term,
        });
    }
    let amplitude = outer.mul(&inner.expect("d_0 = 1"));

    let table = MomentTable::new(&c.b, 3 * m + 2);
    let moment = |a: u32, b: u32| table.get(a, b);
    let out = (0..=m)
        .map(|j| {
            let mut acc = Qi::zero();
            for i in 0..=j {
                let (p, ej) = (amplitude.coeff(i), e.coeff(j - i));
                if p.is_zero() || ej.is_zero() {
                    continue;
                }
                acc.add_assign_ref(&p.mul(ej).integrate(&moment));
            }
            acc
        })
        .collect();
    Ok(out)
}

fn check_terms(n: usize) -> Result<()> {
    if n > MAX_TERMS {
        Err(Error::Unsupported(format!("at most {MAX_TERMS} correction terms, asked for {n}")))
    } else {
        Ok(())
    }
}

/// Expansion of the density of `sqrt(2) B` with `n` corrections beyond the leading term.
pub fn scaled_expansion(kind: AreaKind, n: usize) -> Result<TailExpansion> {
    check_terms(n)?;
    let c = constants(kind);
    let raw = collected_coefficients(kind, 2 * n)?;
    for (j, cj) in raw.iter().enumerate() {
        if !cj.im.is_zero() {
            return Err(Error::Consistency(format!("{kind}: coefficient of x^-{j} is not real")));
        }
        if j % 2 == 1 && !cj.re.is_zero() {
            return Err(Error::Consistency(format!("{kind}: odd coefficient of x^-{j} does not vanish")));
        }
    }
    if !raw[0].re.is_one() {
        return Err(Error::Consistency(format!("{kind}: leading Gaussian integral is not normalised")));
    }

    let q_pow = &c.nu * q(2, 3) - q(2, 1) + &c.lead_power * q(2, 3);
    let unsupported = || Error::Unsupported(format!("{kind}: prefactor leaves the symbolic ring"));
    let prefactor = gamma_symbolic(&c.nu)
        .ok_or_else(unsupported)?
        .mul(&SymbolicConstant::rational_pow(&c.rho, &(q(5, 2) - &c.nu)).ok_or_else(unsupported)?)
        .mul(&c.lead_constant)
        .mul(&SymbolicConstant::rational_pow(&c.s0, &(q_pow + BigRational::one())).ok_or_else(unsupported)?)
        .div(&SymbolicConstant::from_parts(&c.b * q(2, 1), 0, 1, 2));
    let alpha = BigRational::one() - &c.nu * q(2, 3) + &c.lead_power * q(4, 3);
    Ok(TailExpansion {
        kind,
        quantity: Quantity::ScaledDensity,
        alpha,
        b: c.b,
        prefactor,
        corrections: raw.into_iter().step_by(2).map(|cj| cj.re).collect(),
    })
}

/// `f(x) = sqrt(2) g(sqrt(2) x)` applied to an expansion of `g`.
pub fn unscale(scaled: &TailExpansion) -> Result<TailExpansion> {
    let quantity = match scaled.quantity {
        Quantity::ScaledDensity => Quantity::Density,
        Quantity::ScaledTail => Quantity::Tail,
        other => return Err(Error::Domain(format!("{other:?} is already unscaled"))),
    };
    // Densities pick up the Jacobian sqrt(2), tails do not.
    let jacobian = i32::from(quantity == Quantity::Density);
    let half_powers = (&scaled.alpha + BigRational::from_integer(jacobian.into()))
        .to_integer()
        .to_i32()
        .filter(|_| scaled.alpha.is_integer())
        .ok_or_else(|| Error::Unsupported(format!("non-integer power {}", scaled.alpha)))?;
    let mut half = BigRational::one();
    let corrections = scaled
        .corrections
        .iter()
        .map(|c| {
            let v = c * &half;
            half /= BigRational::from_integer(2.into());
            v
        })
        .collect();
    Ok(TailExpansion {
        kind: scaled.kind,
        quantity,
        alpha: scaled.alpha.clone(),
        b: &scaled.b * q(2, 1),
        prefactor: scaled.prefactor.mul(&SymbolicConstant::from_parts(BigRational::one(), half_powers, 0, 0)),
        corrections,
    })
}

/// Density expansion of the area itself, `n` corrections beyond the leading term.
pub fn density_expansion(kind: AreaKind, n: usize) -> Result<TailExpansion> {
    unscale(&scaled_expansion(kind, n)?)
}

/// `-d/dx` of an expansion, as an expansion with power `alpha + 1`.
pub fn negative_derivative(t: &TailExpansion) -> TailExpansion {
    let two_b = &t.b * q(2, 1);
    let mut corrections = Vec::with_capacity(t.corrections.len());
    for m in 0..t.corrections.len() {
        let mut d = t.corrections[m].clone();
        if m > 0 {
            d -= (&t.alpha - BigRational::from_integer(BigInt::from(2 * (m as i64 - 1)))) * &t.corrections[m - 1] / &two_b;
        }
        corrections.push(d);
    }
    TailExpansion {
        kind: t.kind,
        quantity: density_of(t.quantity),
        alpha: &t.alpha + BigRational::one(),
        b: t.b.clone(),
        prefactor: t.prefactor.scale(&two_b),
        corrections,
    }
}

fn density_of(q: Quantity) -> Quantity {
    match q {
        Quantity::ScaledTail => Quantity::ScaledDensity,
        Quantity::Tail => Quantity::Density,
        other => other,
    }
}

/// Integrates a density expansion to the matching expansion of `P(X > x)`.
pub fn tail_expansion(d: &TailExpansion) -> Result<TailExpansion> {
    if !d.b.is_positive() {
        return Err(Error::Domain(format!("Gaussian rate must be positive, got {}", d.b)));
    }
    let quantity = match d.quantity {
        Quantity::ScaledDensity => Quantity::ScaledTail,
        Quantity::Density => Quantity::Tail,
        other => return Err(Error::Domain(format!("{other:?} is not a density"))),
    };
    let two_b = &d.b * q(2, 1);
    let mut corrections: Vec<BigRational> = Vec::with_capacity(d.corrections.len());
    for (m, cm) in d.corrections.iter().enumerate() {
        let mut v = cm.clone();
        if m > 0 {
            v += (&d.alpha + BigRational::one() - BigRational::from_integer(BigInt::from(2 * m as i64))) * &corrections[m - 1] / &two_b;
        }
        corrections.push(v);
    }
    let t = TailExpansion {
        kind: d.kind,
        quantity,
        alpha: &d.alpha - BigRational::one(),
        b: d.b.clone(),
        prefactor: d.prefactor.scale(&two_b.recip()),
        corrections,
    };
    if &negative_derivative(&t) != d {
        return Err(Error::Consistency(format!("{}: tail expansion does not differentiate back", d.kind)));
    }
    Ok(t)
}

/// Ratio `P(B_full > x) / (2 P(B_pos > x) - 2 P(B_full > 2x))` as a series in `x^{-2}`.
///
/// `P(B_full > 2x)` decays like `exp(-4 B x^2)` and contributes nothing to
/// any power of `x^{-2}`, so only the first two tails enter. Fails unless
/// both tails share the same power, rate and halved leading constant.
pub fn positive_part_ratio(full: AreaKind, positive: AreaKind, n: usize) -> Result<Vec<BigRational>> {
    let tf = tail_expansion(&density_expansion(full, n)?)?;
    let tp = tail_expansion(&density_expansion(positive, n)?)?;
    if tf.alpha != tp.alpha || tf.b != tp.b || tf.prefactor != tp.prefactor.scale(&q(2, 1)) {
        return Err(Error::Consistency(format!("{full} and {positive} tails do not share a leading term")));
    }
    let num = FormalSeries::new(SeriesVar::InvX, tf.corrections);
    let den = FormalSeries::new(SeriesVar::InvX, tp.corrections);
    let ratio = num.mul(&den.invert().expect("corrections start with 1"));
    Ok(ratio.coeffs().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase_has_saddle_structure() {
        for kind in AreaKind::ALL {
            let c = constants(kind);
            let phi = phi1_series(kind, 3).unwrap();
            assert_eq!(phi.coeff(0), &Poly2::constant(real(&-&c.b)));
            assert!(phi.coeff(1).is_zero());
            assert_eq!(phi.coeff(2).coeff(0, 2), real(&-&c.b));
            assert_eq!(phi.coeff(2).coeff(2, 0), real(&(-&c.b * q(2, 1))));
            assert_eq!(phi.coeff(3).homogeneous_degree(), Some(3));
            assert!(saddle_gradient(kind).is_zero());
        }
        assert!(phi1_series(AreaKind::Bridge, 1).is_err());
    }

    #[test]
    fn excursion_scaled_leading_terms() {
        let s = scaled_expansion(AreaKind::Excursion, 1).unwrap();
        assert_eq!(s.prefactor.to_string(), "36*sqrt(3)/sqrt(pi)");
        assert_eq!(s.alpha, q(2, 1));
        assert_eq!(s.corrections, vec![q(1, 1), q(-2, 9)]);
        let br = scaled_expansion(AreaKind::Bridge, 0).unwrap();
        assert_eq!(br.to_string(), "2*sqrt(3)/sqrt(pi)*exp(-3*x^2)*(1 + ...)");
    }

    #[test]
    fn tail_transfer_rule() {
        let d = density_expansion(AreaKind::Excursion, 3).unwrap();
        let t = tail_expansion(&d).unwrap();
        assert_eq!(t.prefactor, d.prefactor.scale(&(d.b.clone() * q(2, 1)).recip()));
        assert_eq!(t.to_string(), "6*sqrt(6)/sqrt(pi)*x*exp(-6*x^2)*(1 - 1/36*x^-2 - 1/648*x^-4 - 7/46656*x^-6 + ...)");
    }

    #[test]
    fn too_many_terms() {
        assert!(matches!(scaled_expansion(AreaKind::Bridge, 7), Err(Error::Unsupported(_))));
    }
}
