//! Airy functions of complex argument.
//!
//! `Ai`, `Ai'` and `AI(z) = int_z^inf Ai` are computed on the sector
//! `|arg z| <= 2pi/3` by one of three methods depending on `|z|`:
//! the Maclaurin series near the origin, the asymptotic expansion for
//! `|z| >= 14`, and Taylor-series integration of the Airy equation in
//! between (inwards from the asymptotic circle where `Ai` is recessive,
//! outwards from the Maclaurin disc where it is dominant). The remaining
//! sector and the `Bi` family follow from the rotation identities.

mod asymptotic;
mod beta;
pub mod maclaurin;
mod ode;

use std::f64::consts::{FRAC_PI_3, PI};

use num_complex::Complex64;

pub use asymptotic::bi_partial_sum;
pub use beta::{beta_series, BetaKind};

use crate::error::{Error, Result};
use crate::scalar::{arg_with_side, ensure_finite, zeta_polar, Side};

/// Below this modulus the Maclaurin series is used.
const R_SERIES: f64 = 2.0;
/// At and above this modulus the asymptotic expansion is used.
const R_ASYMPTOTIC: f64 = 14.0;

/// Whether the `Ai` family carries `e^{zeta}` and the `Bi` family `e^{-zeta}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Scaling {
    #[default]
    Unscaled,
    ExpScaled,
}

/// `Ai`, `Ai'`, `Bi`, `Bi'`, `AI` and `BI = int_0^z Bi` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryBundle {
    pub z: Complex64,
    pub side: Option<Side>,
    pub ai: Complex64,
    pub ai_prime: Complex64,
    pub bi: Complex64,
    pub bi_prime: Complex64,
    pub ai_int: Complex64,
    pub bi_int: Complex64,
    pub scaling: Scaling,
    /// `zeta(z)` on the branch used for the scaling factors.
    pub zeta: Complex64,
    /// `false` outside `|arg z| <= pi/3, |z| <= 40`, where accuracy is not
    /// guaranteed to the documented `1e-12`.
    pub validated: bool,
}

/// `Ai`, `Ai'` and `AI` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiTriple {
    pub ai: Complex64,
    pub ai_prime: Complex64,
    pub ai_int: Complex64,
}

/// Direction of a `2pi/3` rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rotation {
    /// `z -> z e^{2 pi i / 3}`
    Positive,
    /// `z -> z e^{-2 pi i / 3}`
    Negative,
}

impl Rotation {
    pub fn sign(self) -> f64 {
        match self {
            Rotation::Positive => 1.0,
            Rotation::Negative => -1.0,
        }
    }
}

impl AiryBundle {
    /// `Ai Bi' - Ai' Bi`; equals `1/pi` in either scaling.
    pub fn wronskian(&self) -> Complex64 {
        self.ai * self.bi_prime - self.ai_prime * self.bi
    }

    /// Converts between scalings.
    pub fn rescaled(&self, to: Scaling) -> Result<AiryBundle> {
        if to == self.scaling {
            return Ok(*self);
        }
        let (fa, fb) = match to {
            Scaling::Unscaled => ((-self.zeta).exp(), self.zeta.exp()),
            Scaling::ExpScaled => (self.zeta.exp(), (-self.zeta).exp()),
        };
        let out = AiryBundle {
            ai: self.ai * fa,
            ai_prime: self.ai_prime * fa,
            ai_int: self.ai_int * fa,
            bi: self.bi * fb,
            bi_prime: self.bi_prime * fb,
            bi_int: self.bi_int * fb,
            scaling: to,
            ..*self
        };
        out.check_finite()?;
        Ok(out)
    }

    fn check_finite(&self) -> Result<()> {
        for v in [self.ai, self.ai_prime, self.bi, self.bi_prime, self.ai_int, self.bi_int] {
            ensure_finite(v, self.z)?;
        }
        Ok(())
    }
}

/// `[Ai, Ai', AI] * e^{zeta}` at every radius on the ray `theta`, `|theta| <= 2pi/3`.
///
/// Radii in the intermediate annulus share one sweep of the ODE integrator.
fn core_triples_ray(theta: f64, radii: &[f64]) -> Vec<[Complex64; 3]> {
    let mut out = vec![[Complex64::default(); 3]; radii.len()];
    let mut annulus: Vec<usize> = Vec::new();
    for (i, &r) in radii.iter().enumerate() {
        if r >= R_ASYMPTOTIC {
            out[i] = asymptotic::triple_scaled(r, theta);
        } else if r <= R_SERIES {
            let s = maclaurin::six(Complex64::from_polar(r, theta));
            let e = zeta_polar(r, theta).exp();
            out[i] = [s.ai * e, s.aip * e, s.aint * e];
        } else {
            annulus.push(i);
        }
    }
    if annulus.is_empty() {
        return out;
    }
    let (mut r, mut state) = if theta.abs() <= FRAC_PI_3 {
        // Inwards from the asymptotic circle, where Ai is recessive.
        annulus.sort_by(|&a, &b| radii[b].total_cmp(&radii[a]));
        let [a, ap, ai] = asymptotic::triple_scaled(R_ASYMPTOTIC, theta);
        let back = (-zeta_polar(R_ASYMPTOTIC, theta)).exp();
        (R_ASYMPTOTIC, ode::State { y: a * back, yp: ap * back, int: ai * back })
    } else {
        annulus.sort_by(|&a, &b| radii[a].total_cmp(&radii[b]));
        let m = maclaurin::six(Complex64::from_polar(R_SERIES, theta));
        (R_SERIES, ode::State { y: m.ai, yp: m.aip, int: m.aint })
    };
    for i in annulus {
        state = ode::along_ray(theta, r, radii[i], state);
        r = radii[i];
        let e = zeta_polar(r, theta).exp();
        out[i] = [state.y * e, state.yp * e, state.int * e];
    }
    out
}

/// `[Ai, Ai', AI] * e^{zeta(z)}` at every radius on the ray `theta` in `[-pi, pi]`.
pub(crate) fn triples_scaled_ray(theta: f64, radii: &[f64]) -> Vec<[Complex64; 3]> {
    const EDGE: f64 = 2.0 * PI / 3.0;
    if theta.abs() <= EDGE {
        return core_triples_ray(theta, radii);
    }
    // With s = sign(theta) and w = e^{2 s pi i/3}, the points z1 = z/w and
    // z2 = z/w^2 lie in the core sector, zeta(z1) = -zeta(z), zeta(z2) = zeta(z), and
    //   Ai(z)  = -w^{-1} Ai(z1) - w Ai(z2)
    //   Ai'(z) = -w Ai'(z1) - w^{-1} Ai'(z2)
    //   AI(z)  = 1 - AI(z1) - AI(z2)
    let s = theta.signum();
    let w = Complex64::from_polar(1.0, s * EDGE);
    let first = core_triples_ray(theta - s * EDGE, radii);
    let second = core_triples_ray(theta - s * 2.0 * EDGE, radii);
    radii
        .iter()
        .zip(first.iter().zip(&second))
        .map(|(&r, ([a1, a1p, a1i], [a2, a2p, a2i]))| {
            let zeta = zeta_polar(r, theta);
            let e2 = (2.0 * zeta).exp();
            [
                -w.inv() * a1 * e2 - w * a2,
                -w * a1p * e2 - w.inv() * a2p,
                zeta.exp() - a1i * e2 - a2i,
            ]
        })
        .collect()
}

/// `[Ai, Ai', AI] * e^{zeta(z)}` at `z = r e^{i theta}`, `theta` in `[-pi, pi]`.
pub(crate) fn triple_scaled_polar(r: f64, theta: f64) -> [Complex64; 3] {
    triples_scaled_ray(theta, &[r])[0]
}

fn in_validated_sector(r: f64, theta: f64) -> bool {
    theta.abs() <= FRAC_PI_3 + 1e-12 && r <= 40.0
}

/// The six Airy values at `z`. Points on the negative real axis need a side flag.
pub fn airy_bundle(z: Complex64, side: Option<Side>, scaling: Scaling) -> Result<AiryBundle> {
    let theta = arg_with_side(z, side)?;
    airy_bundle_polar(z.norm(), theta, scaling).map(|mut b| {
        b.z = z;
        b.side = side;
        b
    })
}

/// The six Airy values at `r e^{i theta}`, `theta` in `[-pi, pi]`.
pub fn airy_bundle_polar(r: f64, theta: f64, scaling: Scaling) -> Result<AiryBundle> {
    Ok(airy_bundles_ray(theta, &[r], scaling)?.remove(0))
}

/// [`airy_bundle_polar`] at many radii on one ray; far cheaper than point by
/// point when several radii fall in the ODE annulus.
pub fn airy_bundles_ray(theta: f64, radii: &[f64], scaling: Scaling) -> Result<Vec<AiryBundle>> {
    if !theta.is_finite() || theta.abs() > PI {
        return Err(Error::Domain(format!("invalid ray angle {theta}")));
    }
    if let Some(&r) = radii.iter().find(|r| !(r.is_finite() && **r >= 0.0)) {
        return Err(Error::Domain(format!("invalid radius {r}")));
    }
    // Bi from Ai at the rotated point zr = z e^{-2 s pi i/3} (s = +1 for theta >= 0):
    //   Bi  = s i Ai(z) + 2 e^{-s pi i/6} Ai(zr)
    //   Bi' = s i Ai'(z) + 2 e^{-5 s pi i/6} Ai'(zr)
    //   BI  = s i (1 - AI(z) - 2 AI(zr))
    // and zeta(zr) = -zeta(z).
    let s = if theta >= 0.0 { 1.0 } else { -1.0 };
    let outer: Vec<f64> = radii.iter().copied().filter(|&r| r > R_SERIES).collect();
    let direct = triples_scaled_ray(theta, &outer);
    let rotated = triples_scaled_ray(theta - s * 2.0 * PI / 3.0, &outer);
    let si = Complex64::new(0.0, s);
    let c1 = Complex64::from_polar(2.0, -s * PI / 6.0);
    let c5 = Complex64::from_polar(2.0, -5.0 * s * PI / 6.0);
    let mut k = 0;
    radii
        .iter()
        .map(|&r| {
            let z = Complex64::from_polar(r, theta);
            let zeta = zeta_polar(r, theta);
            let side = if z.im == 0.0 && z.re < 0.0 {
                Some(if theta > 0.0 { Side::Above } else { Side::Below })
            } else {
                None
            };
            let validated = in_validated_sector(r, theta);
            if r <= R_SERIES {
                let m = maclaurin::six(z);
                let b = AiryBundle {
                    z,
                    side,
                    ai: m.ai,
                    ai_prime: m.aip,
                    bi: m.bi,
                    bi_prime: m.bip,
                    ai_int: m.aint,
                    bi_int: m.bint,
                    scaling: Scaling::Unscaled,
                    zeta,
                    validated,
                };
                return b.rescaled(scaling);
            }
            let [a, ap, ai] = direct[k];
            let [ra, rap, rai] = rotated[k];
            k += 1;
            let em2 = (-2.0 * zeta).exp();
            let em1 = (-zeta).exp();
            let b = AiryBundle {
                z,
                side,
                ai: a,
                ai_prime: ap,
                ai_int: ai,
                bi: si * a * em2 + c1 * ra,
                bi_prime: si * ap * em2 + c5 * rap,
                bi_int: si * (em1 - ai * em2 - 2.0 * rai),
                scaling: Scaling::ExpScaled,
                zeta,
                validated,
            };
            b.check_finite()?;
            b.rescaled(scaling)
        })
        .collect()
}

/// `Ai`, `Ai'`, `AI` at `z e^{+-2 pi i/3}` from an unscaled bundle at `z`.
pub fn connection_rotate(b: &AiryBundle, direction: Rotation) -> Result<AiTriple> {
    if b.scaling != Scaling::Unscaled {
        return Err(Error::Domain("connection_rotate needs an unscaled bundle".into()));
    }
    b.check_finite()?;
    let s = direction.sign();
    let i = Complex64::new(0.0, 1.0);
    let half = Complex64::from_polar(0.5, s * FRAC_PI_3);
    let half_conj = Complex64::from_polar(0.5, -s * FRAC_PI_3);
    Ok(AiTriple {
        ai: half * (b.ai - s * i * b.bi),
        ai_prime: half_conj * (b.ai_prime - s * i * b.bi_prime),
        ai_int: 0.5 - 0.5 * b.ai_int - s * 0.5 * i * b.bi_int,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_values() {
        let b = airy_bundle(Complex64::new(0.0, 0.0), None, Scaling::Unscaled).unwrap();
        assert!((b.ai.re - 0.355_028_053_887_817_24).abs() < 1e-16);
        assert!((b.bi.re - 0.614_926_627_446_000_73).abs() < 1e-15);
        assert_eq!(b.ai_int.re, 1.0 / 3.0);
        assert_eq!(b.bi_int, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn rotation_fixes_origin() {
        let b = airy_bundle(Complex64::new(0.0, 0.0), None, Scaling::Unscaled).unwrap();
        let t = connection_rotate(&b, Rotation::Positive).unwrap();
        assert!((t.ai - b.ai).norm() < 1e-16);
        assert!((t.ai_int - Complex64::new(1.0 / 3.0, 0.0)).norm() < 1e-16);
    }

    #[test]
    fn negative_axis_needs_side() {
        let z = Complex64::new(-3.0, 0.0);
        assert!(airy_bundle(z, None, Scaling::Unscaled).is_err());
        let up = airy_bundle(z, Some(Side::Above), Scaling::Unscaled).unwrap();
        let down = airy_bundle(z, Some(Side::Below), Scaling::Unscaled).unwrap();
        // Ai is entire, so both limits agree.
        assert!((up.ai - down.ai).norm() < 1e-13);
    }

    #[test]
    fn unscaled_overflow_is_an_error() {
        let z = Complex64::new(200.0, 0.0);
        assert!(matches!(airy_bundle(z, None, Scaling::Unscaled), Err(Error::Overflow(_))));
        assert!(airy_bundle(z, None, Scaling::ExpScaled).is_ok());
    }
}
