//! Laplace-transform kernels `Psi` of the seven areas and their rotated
//! combinations `H(z) = e^{2 pi nu i/3} Psi(z e^{2pi i/3}) - e^{-2 pi nu i/3} Psi(z e^{-2pi i/3})`.
//!
//! All kernels are those of the rescaled variables `sqrt(2) B`.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::airy::{airy_bundle, airy_bundle_polar, airy_bundles_ray, beta_series, maclaurin, triple_scaled_polar, AiryBundle, BetaKind, Scaling};
use crate::dd::{Dd, DdComplex};
use crate::error::{Error, Result};
use crate::exact::{q, FormalSeries, SeriesVar, SymbolicConstant};
use crate::scalar::{on_cut, polar_pow, Precision};

/// The seven Brownian areas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AreaKind {
    Excursion,
    Bridge,
    Motion,
    Meander,
    DoubleMeander,
    BridgePositive,
    MotionPositive,
}

impl AreaKind {
    pub const ALL: [AreaKind; 7] = [
        AreaKind::Excursion,
        AreaKind::Bridge,
        AreaKind::Motion,
        AreaKind::Meander,
        AreaKind::DoubleMeander,
        AreaKind::BridgePositive,
        AreaKind::MotionPositive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AreaKind::Excursion => "excursion",
            AreaKind::Bridge => "bridge",
            AreaKind::Motion => "motion",
            AreaKind::Meander => "meander",
            AreaKind::DoubleMeander => "double-meander",
            AreaKind::BridgePositive => "bridge-positive",
            AreaKind::MotionPositive => "motion-positive",
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            AreaKind::Excursion => "ex",
            AreaKind::Bridge => "br",
            AreaKind::Motion => "bm",
            AreaKind::Meander => "me",
            AreaKind::DoubleMeander => "dm",
            AreaKind::BridgePositive => "brp",
            AreaKind::MotionPositive => "bmp",
        }
    }

    /// Exponent `gamma` in `H(z) = h(z) e^{-gamma z^{3/2}}`, as a float.
    pub(crate) fn gamma_f64(self) -> f64 {
        if self.fast_decay() {
            4.0 / 3.0
        } else {
            2.0 / 3.0
        }
    }

    pub(crate) fn nu_f64(self) -> f64 {
        match self {
            AreaKind::Motion | AreaKind::DoubleMeander | AreaKind::MotionPositive => 1.0,
            _ => 0.5,
        }
    }

    /// Kinds whose `H` decays like `e^{-(4/3) z^{3/2}}`.
    fn fast_decay(self) -> bool {
        matches!(self, AreaKind::Excursion | AreaKind::Bridge | AreaKind::BridgePositive)
    }
}

impl fmt::Display for AreaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AreaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        AreaKind::ALL
            .into_iter()
            .find(|k| k.name() == norm || k.short_name() == norm)
            .ok_or_else(|| Error::Domain(format!("unknown area kind `{s}`")))
    }
}

/// Exact constants attached to one area.
#[derive(Debug, Clone, PartialEq)]
pub struct AreaConstants {
    pub kind: AreaKind,
    pub nu: BigRational,
    pub gamma: BigRational,
    /// Saddle-point scale `rho = (9 gamma / 4)^2`.
    pub rho: BigRational,
    /// Gaussian rate `b = rho / 3` of the scaled density.
    pub b: BigRational,
    /// Saddle location `s0 = 2b / gamma`.
    pub s0: BigRational,
    /// `h(z) ~ i c z^p` as `z -> +inf`: the power `p`.
    pub lead_power: BigRational,
    /// ... and the constant `c`.
    pub lead_constant: SymbolicConstant,
}

pub fn constants(kind: AreaKind) -> AreaConstants {
    let (nu, gamma) = match kind {
        AreaKind::Excursion | AreaKind::Bridge | AreaKind::BridgePositive => (q(1, 2), q(4, 3)),
        AreaKind::Meander => (q(1, 2), q(2, 3)),
        AreaKind::Motion | AreaKind::DoubleMeander | AreaKind::MotionPositive => (q(1, 1), q(2, 3)),
    };
    let nine_gamma_4 = &gamma * q(9, 4);
    let rho = &nine_gamma_4 * &nine_gamma_4;
    let b = &rho / q(3, 1);
    let s0 = &b * q(2, 1) / &gamma;
    let sqrt_pi = SymbolicConstant::sqrt_pi();
    let (lead_power, lead_constant) = match kind {
        AreaKind::Bridge => (q(-1, 2), SymbolicConstant::int(2)),
        AreaKind::Excursion => (q(1, 1), SymbolicConstant::int(8)),
        AreaKind::Motion => (q(-1, 4), sqrt_pi.scale(&q(2, 1))),
        AreaKind::Meander => (q(1, 4), sqrt_pi.scale(&q(2, 1))),
        AreaKind::DoubleMeander => (q(-1, 4), sqrt_pi.scale(&q(4, 1))),
        AreaKind::BridgePositive => (q(-1, 2), SymbolicConstant::int(1)),
        AreaKind::MotionPositive => (q(-1, 4), sqrt_pi),
    };
    AreaConstants {
        kind,
        nu,
        gamma,
        rho,
        b,
        s0,
        lead_power,
        lead_constant,
    }
}

fn check_not_on_cut(z: Complex64) -> Result<()> {
    if on_cut(z) {
        Err(Error::Cut(z))
    } else {
        Ok(())
    }
}

fn nonzero(d: Complex64, z: Complex64) -> Result<Complex64> {
    if d.norm() == 0.0 || !d.re.is_finite() || !d.im.is_finite() {
        Err(Error::Pole(z))
    } else {
        Ok(d)
    }
}

/// `Psi` from `Ai`, `Ai'`, `AI` (any common scale factor) and `sqrt z`.
fn psi_from(kind: AreaKind, z: Complex64, sqrt_z: Complex64, a: Complex64, ap: Complex64, ai: Complex64) -> Result<Complex64> {
    let v = match kind {
        AreaKind::Bridge => -a / nonzero(ap, z)?,
        AreaKind::Excursion => {
            let r = ap / nonzero(a, z)?;
            2.0 * r * r - 2.0 * z
        }
        AreaKind::Motion => -ai / nonzero(ap, z)?,
        AreaKind::Meander => ai / nonzero(a, z)?,
        AreaKind::DoubleMeander => {
            let r = ai / nonzero(a, z)?;
            r * r
        }
        AreaKind::BridgePositive => 2.0 * a / nonzero(sqrt_z * a - ap, z)?,
        AreaKind::MotionPositive => (a / nonzero(sqrt_z, z)? + ai) / nonzero(sqrt_z * a - ap, z)?,
    };
    Ok(v)
}

fn psi_polar(kind: AreaKind, r: f64, theta: f64) -> Result<Complex64> {
    let [a, ap, ai] = triple_scaled_polar(r, theta);
    psi_from(kind, Complex64::from_polar(r, theta), polar_pow(r, theta, 0.5), a, ap, ai)
}

/// The kernel `Psi(z)` on the principal branch.
pub fn psi(kind: AreaKind, z: Complex64) -> Result<Complex64> {
    check_not_on_cut(z)?;
    let theta = if z.norm() == 0.0 { 0.0 } else { z.arg() };
    psi_polar(kind, z.norm(), theta)
}

fn check_sector(z: Complex64, limit: f64) -> Result<()> {
    if z.norm() > 0.0 && z.arg().abs() > limit + 1e-14 {
        return Err(Error::Sector { z, limit });
    }
    Ok(())
}

/// Largest `|z|` for the double-double definitional route.
pub const EXTENDED_RADIUS: f64 = 12.0;

const SQRT3_HALF_DD: Dd = Dd::new(0.8660254037844386, 5.0175421109034514e-17);

/// `e^{i k pi / 3}` in double-double for `k` in `-2..=2`.
fn sixth_root_dd(k: i32) -> DdComplex {
    let half = Dd::from_f64(0.5);
    let (re, im) = match k {
        0 => (Dd::ONE, Dd::ZERO),
        1 => (half, SQRT3_HALF_DD),
        -1 => (half, -SQRT3_HALF_DD),
        2 => (-half, SQRT3_HALF_DD),
        -2 => (-half, -SQRT3_HALF_DD),
        _ => unreachable!("only |k| <= 2 is used"),
    };
    DdComplex::new(re, im)
}

fn psi_dd(kind: AreaKind, w: DdComplex, sqrt_guess: Complex64) -> Result<DdComplex> {
    let s = maclaurin::six_dd(w);
    let (a, ap, ai) = (s.ai, s.aip, s.aint);
    let zc = w.to_c64();
    let check = |d: DdComplex| -> Result<DdComplex> {
        if d.norm_f64() == 0.0 {
            Err(Error::Pole(zc))
        } else {
            Ok(d)
        }
    };
    // Newton-refine the branch-correct double root.
    let g = DdComplex::from_c64(sqrt_guess);
    let sqrt_w = (g + w / g).scale_f64(0.5);
    let v = match kind {
        AreaKind::Bridge => -(a / check(ap)?),
        AreaKind::Excursion => {
            let r = ap / check(a)?;
            (r * r).scale_f64(2.0) - w.scale_f64(2.0)
        }
        AreaKind::Motion => -(ai / check(ap)?),
        AreaKind::Meander => ai / check(a)?,
        AreaKind::DoubleMeander => {
            let r = ai / check(a)?;
            r * r
        }
        AreaKind::BridgePositive => a.scale_f64(2.0) / check(sqrt_w * a - ap)?,
        AreaKind::MotionPositive => (a / sqrt_w + ai) / check(sqrt_w * a - ap)?,
    };
    Ok(v)
}

/// `H(z)` by literal rotation of `Psi`. The two terms cancel to about
/// `e^{-gamma |z|^{3/2}}` relative, so double precision loses all accuracy
/// beyond `|z| ~ 5`; the extended mode keeps `1e-12` up to `|z| = 8`.
pub fn hx_definitional(kind: AreaKind, z: Complex64, precision: Precision) -> Result<Complex64> {
    check_not_on_cut(z)?;
    check_sector(z, FRAC_PI_3)?;
    let r = z.norm();
    let theta = if r == 0.0 { 0.0 } else { z.arg() };
    let nu = kind.nu_f64();
    let turn = 2.0 * PI / 3.0;
    match precision {
        Precision::Double => {
            let plus = psi_polar(kind, r, theta + turn)?;
            let minus = psi_polar(kind, r, theta - turn)?;
            Ok(Complex64::from_polar(1.0, nu * turn) * plus - Complex64::from_polar(1.0, -nu * turn) * minus)
        }
        Precision::Extended => {
            if r > EXTENDED_RADIUS {
                return Err(Error::Unsupported(format!(
                    "extended definitional route is limited to |z| <= {EXTENDED_RADIUS}"
                )));
            }
            let zd = DdComplex::from_c64(z);
            let wp = sixth_root_dd(2) * zd;
            let wm = sixth_root_dd(-2) * zd;
            let plus = psi_dd(kind, wp, polar_pow(r, theta + turn, 0.5))?;
            let minus = psi_dd(kind, wm, polar_pow(r, theta - turn, 0.5))?;
            // nu = 1/2 rotates by e^{+-i pi/3}, nu = 1 by e^{+-2 i pi/3}.
            let k = if nu == 1.0 { 2 } else { 1 };
            Ok((sixth_root_dd(k) * plus - sixth_root_dd(-k) * minus).to_c64())
        }
    }
}

/// `H(z)` from the closed forms in terms of `Ai`, `Bi`, `AI`, `BI` at `z`.
pub fn hx_closed(kind: AreaKind, z: Complex64) -> Result<Complex64> {
    check_not_on_cut(z)?;
    check_sector(z, FRAC_PI_3)?;
    let b = airy_bundle(z, None, Scaling::Unscaled)?;
    let i = Complex64::new(0.0, 1.0);
    let (a, ap, bi, bp, ai_int, bi_int) = (b.ai, b.ai_prime, b.bi, b.bi_prime, b.ai_int, b.bi_int);
    let sz = if z.norm() == 0.0 { Complex64::new(0.0, 0.0) } else { z.sqrt() };
    let v = match kind {
        AreaKind::Bridge => 2.0 * i / (PI * nonzero(ap * ap + bp * bp, z)?),
        AreaKind::Excursion => {
            let d = nonzero(a * a + bi * bi, z)?;
            8.0 * i * (a * ap + bi * bp) / (PI * d * d)
        }
        AreaKind::Motion => 2.0 * i * (bp - ai_int * bp - ap * bi_int) / nonzero(ap * ap + bp * bp, z)?,
        AreaKind::Meander => 2.0 * i * (bi - ai_int * bi - a * bi_int) / nonzero(a * a + bi * bi, z)?,
        AreaKind::DoubleMeander => {
            let d = nonzero(a * a + bi * bi, z)?;
            let one_m = 1.0 - ai_int;
            4.0 * i * (one_m * a + bi_int * bi) * (one_m * bi - bi_int * a) / (d * d)
        }
        AreaKind::BridgePositive => {
            let (sa, sb) = (sz * a + ap, sz * bi + bp);
            4.0 * i / (PI * nonzero(sa * sa + sb * sb, z)?)
        }
        AreaKind::MotionPositive => {
            let (sa, sb) = (sz * a + ap, sz * bi + bp);
            let inv_sqrt = 1.0 / nonzero(sz, z)?;
            2.0 * i * ((1.0 - ai_int) * sb - bi_int * sa + inv_sqrt / PI) / nonzero(sa * sa + sb * sb, z)?
        }
    };
    Ok(v)
}

/// `h(z) = H(z) e^{gamma z^{3/2}}` from exponentially scaled Airy values.
pub fn h_scaled(kind: AreaKind, z: Complex64) -> Result<Complex64> {
    check_not_on_cut(z)?;
    check_sector(z, FRAC_PI_6)?;
    let theta = if z.norm() == 0.0 { 0.0 } else { z.arg() };
    h_scaled_polar(kind, z.norm(), theta)
}

/// [`h_scaled`] at `r e^{i theta}` without the sector check.
pub(crate) fn h_scaled_polar(kind: AreaKind, r: f64, theta: f64) -> Result<Complex64> {
    h_from_bundle(kind, r, theta, &airy_bundle_polar(r, theta, Scaling::ExpScaled)?)
}

/// [`h_scaled`] at many radii on the ray `theta`, sharing one Airy sweep.
pub(crate) fn h_scaled_ray(kind: AreaKind, theta: f64, radii: &[f64]) -> Result<Vec<Complex64>> {
    let bundles = airy_bundles_ray(theta, radii, Scaling::ExpScaled)?;
    radii.iter().zip(&bundles).map(|(&r, b)| h_from_bundle(kind, r, theta, b)).collect()
}

fn h_from_bundle(kind: AreaKind, r: f64, theta: f64, b: &AiryBundle) -> Result<Complex64> {
    let z = b.z;
    let i = Complex64::new(0.0, 1.0);
    let (a, ap, bi, bp, ais, bis) = (b.ai, b.ai_prime, b.bi, b.bi_prime, b.ai_int, b.bi_int);
    let e1 = (-b.zeta).exp();
    let e2 = e1 * e1;
    let v = match kind {
        AreaKind::Bridge => 2.0 * i / (PI * nonzero(bp * bp + e2 * e2 * ap * ap, z)?),
        AreaKind::Excursion => {
            let d = nonzero(bi * bi + e2 * e2 * a * a, z)?;
            8.0 * i * (bi * bp + e2 * e2 * a * ap) / (PI * d * d)
        }
        AreaKind::Motion => 2.0 * i * (bp - e1 * (ais * bp + ap * bis)) / nonzero(bp * bp + e2 * e2 * ap * ap, z)?,
        AreaKind::Meander => 2.0 * i * (bi - e1 * (ais * bi + a * bis)) / nonzero(bi * bi + e2 * e2 * a * a, z)?,
        AreaKind::DoubleMeander => {
            let d = nonzero(bi * bi + e2 * e2 * a * a, z)?;
            let first = bis * bi + e1 * e2 * (a - e1 * ais * a);
            let second = bi - e1 * (ais * bi + bis * a);
            4.0 * i * first * second / (d * d)
        }
        AreaKind::BridgePositive => {
            let sz = polar_pow(r, theta, 0.5);
            let (sa, sb) = (sz * a + ap, sz * bi + bp);
            4.0 * i / (PI * nonzero(sb * sb + e2 * e2 * sa * sa, z)?)
        }
        AreaKind::MotionPositive => {
            let sz = polar_pow(r, theta, 0.5);
            let (sa, sb) = (sz * a + ap, sz * bi + bp);
            let inv_sqrt = 1.0 / nonzero(sz, z)?;
            2.0 * i * (sb - e1 * (ais * sb + bis * sa - inv_sqrt / PI)) / nonzero(sb * sb + e2 * e2 * sa * sa, z)?
        }
    };
    Ok(v)
}

/// `H(z) = h(z) e^{-gamma z^{3/2}}` using the scaled evaluation.
pub fn hx_from_scaled(kind: AreaKind, z: Complex64) -> Result<Complex64> {
    let h = h_scaled(kind, z)?;
    let r = z.norm();
    let theta = if r == 0.0 { 0.0 } else { z.arg() };
    Ok(h * (-kind.gamma_f64() * polar_pow(r, theta, 1.5)).exp())
}

/// The correction series `h_hat(t)`, `t = z^{-3/2}`, with
/// `h(z) ~ i c z^p h_hat(z^{-3/2})` for large `z`.
pub fn hhat_series(kind: AreaKind, order: usize) -> Result<FormalSeries<BigRational>> {
    let b0 = beta_series(BetaKind::Zero, order)?;
    let b1 = beta_series(BetaKind::One, order)?;
    let inv = |s: &FormalSeries<BigRational>| s.invert().expect("beta series start with 1");
    let mean = || b0.add(&b1).scale(&q(1, 2));
    let out = match kind {
        AreaKind::Bridge => inv(&b1.mul(&b1)),
        AreaKind::Excursion => b1.mul(&inv(&b0.mul(&b0).mul(&b0))),
        AreaKind::Motion => inv(&b1),
        AreaKind::Meander => inv(&b0),
        AreaKind::DoubleMeander => beta_series(BetaKind::MinusOne, order)?.mul(&inv(&b0.mul(&b0))),
        AreaKind::BridgePositive => {
            let m = mean();
            inv(&m.mul(&m))
        }
        AreaKind::MotionPositive => inv(&mean()),
    };
    debug_assert_eq!(out.var(), SeriesVar::T);
    Ok(out)
}
