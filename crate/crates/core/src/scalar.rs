//! Branch conventions for fractional powers of complex numbers.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex value used throughout the numerical routines.
pub type ComplexScalar = Complex64;

/// Which limit to take on the negative real axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `-r + i0`, argument `+pi`.
    Above,
    /// `-r - i0`, argument `-pi`.
    Below,
}

/// Working precision for evaluations that suffer cancellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    #[default]
    Double,
    /// Double-double arithmetic (about 32 significant digits) for
    /// small-argument series; see [`crate::dd`].
    Extended,
}

/// Returns `true` when `z` is on the closed negative real axis (excluding 0).
pub fn on_cut(z: Complex64) -> bool {
    z.im == 0.0 && z.re < 0.0
}

/// Principal argument of `z`, with the side flag deciding the value on the
/// negative real axis.
pub fn arg_with_side(z: Complex64, side: Option<Side>) -> Result<f64> {
    if on_cut(z) {
        return match side {
            Some(Side::Above) => Ok(PI),
            Some(Side::Below) => Ok(-PI),
            None => Err(Error::BranchAmbiguity(z)),
        };
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Ok(0.0);
    }
    Ok(z.im.atan2(z.re))
}

/// `r^a e^{i a theta}`: a real power taken on the branch fixed by `theta`.
pub fn polar_pow(r: f64, theta: f64, a: f64) -> Complex64 {
    if r == 0.0 {
        return if a == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
    }
    Complex64::from_polar(r.powf(a), a * theta)
}

/// `zeta(z) = (2/3) z^{3/2}` in polar form.
pub fn zeta_polar(r: f64, theta: f64) -> Complex64 {
    polar_pow(r, theta, 1.5) * (2.0 / 3.0)
}

/// `zeta(z) = (2/3) z^{3/2}` on the principal branch. On the negative real
/// axis the side flag picks the boundary value.
pub fn zeta(z: Complex64, side: Option<Side>) -> Result<Complex64> {
    let theta = arg_with_side(z, side)?;
    Ok(zeta_polar(z.norm(), theta))
}

/// Principal square root honouring the side flag on the cut.
pub fn sqrt_with_side(z: Complex64, side: Option<Side>) -> Result<Complex64> {
    let theta = arg_with_side(z, side)?;
    Ok(polar_pow(z.norm(), theta, 0.5))
}

/// Fails unless every component is finite.
pub fn ensure_finite(z: Complex64, at: Complex64) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Overflow(at))
    }
}
