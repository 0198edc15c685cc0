//! Exact arithmetic: rationals, Gaussian rationals, truncated power series
//! and a small ring of closed-form constants.

mod qi;
mod series;
mod symbolic;

pub use qi::{Field, Qi};
pub use series::{FormalSeries, SeriesVar};
pub use symbolic::{gamma_symbolic, SymbolicConstant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Generalized binomial coefficient `binom(a, k)` for rational `a`.
pub fn binomial(a: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for j in 0..k {
        acc = acc * (a - BigRational::from_integer(BigInt::from(j))) / BigRational::from_integer(BigInt::from(j + 1));
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Lossy conversion to `f64`, accurate for values well inside the exponent range.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    if r.is_zero() {
        return 0.0;
    }
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Shift both sides down so the quotient survives the conversion.
            let nb = r.numer().bits() as i64;
            let db = r.denom().bits() as i64;
            let shift_n = (nb - 900).max(0) as usize;
            let shift_d = (db - 900).max(0) as usize;
            let n = (r.numer() >> shift_n).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift_d).to_f64().unwrap_or(1.0);
            n / d * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
        }
    }
}

/// Renders a rational the way it is written in the published tables: `-1/36`, `1`.
pub fn rat_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
