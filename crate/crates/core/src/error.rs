use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the numerical and symbolic routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("z = {0} lies on the negative real axis; a side flag (+i0 or -i0) is required")]
    BranchAmbiguity(Complex64),

    #[error("exponent overflow in unscaled evaluation at z = {0}")]
    Overflow(Complex64),

    #[error("z = {z} lies outside the sector |arg z| <= {limit}")]
    Sector { z: Complex64, limit: f64 },

    #[error("kernel denominator vanishes at z = {0}")]
    Pole(Complex64),

    #[error("kernel is undefined on the cut (-inf, 0]: z = {0}")]
    Cut(Complex64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("tolerance not met: estimated error {achieved:.3e} exceeds target {target:.3e}")]
    ToleranceNotMet { achieved: f64, target: f64 },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("contour refinement could not keep argument jumps below pi/2 near t = {0}")]
    StepResolution(f64),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
