use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rat_to_f64;

/// A constant of the form `c * 2^{a/2} * 3^{b/2} * pi^{k/2}` with rational `c`.
///
/// The representation is normalised (`a, b` in `{0, 1}`), so structural
/// equality is value equality. This ring is closed under the products,
/// quotients and square roots that appear in the area prefactors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymbolicConstant {
    coeff: BigRational,
    sqrt2: u8,
    sqrt3: u8,
    pi_halves: i32,
}

impl SymbolicConstant {
    pub fn rational(coeff: BigRational) -> Self {
        SymbolicConstant {
            coeff,
            sqrt2: 0,
            sqrt3: 0,
            pi_halves: 0,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// `2^{a/2} 3^{b/2} pi^{k/2}` times a rational.
    pub fn from_parts(coeff: BigRational, two_halves: i32, three_halves: i32, pi_halves: i32) -> Self {
        let mut c = coeff;
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        c *= pow_i(&two, two_halves.div_euclid(2));
        c *= pow_i(&three, three_halves.div_euclid(2));
        SymbolicConstant {
            coeff: c,
            sqrt2: two_halves.rem_euclid(2) as u8,
            sqrt3: three_halves.rem_euclid(2) as u8,
            pi_halves,
        }
    }

    pub fn sqrt_pi() -> Self {
        Self::from_parts(BigRational::one(), 0, 0, 1)
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn pi_halves(&self) -> i32 {
        self.pi_halves
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_parts(
            &self.coeff * &o.coeff,
            i32::from(self.sqrt2 + o.sqrt2),
            i32::from(self.sqrt3 + o.sqrt3),
            self.pi_halves + o.pi_halves,
        )
    }

    pub fn recip(&self) -> Self {
        assert!(!self.coeff.is_zero(), "reciprocal of zero");
        Self::from_parts(
            self.coeff.recip(),
            -i32::from(self.sqrt2),
            -i32::from(self.sqrt3),
            -self.pi_halves,
        )
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.recip())
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let mut out = self.clone();
        out.coeff *= r;
        out
    }

    pub fn powi(&self, e: i32) -> Self {
        let base = if e < 0 { self.recip() } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Square root, when it stays inside the ring.
    pub fn sqrt(&self) -> Option<Self> {
        // Roots of sqrt(2), sqrt(3) or odd powers of sqrt(pi) would need fourth roots.
        if self.coeff.is_negative() || self.sqrt2 != 0 || self.sqrt3 != 0 || self.pi_halves % 2 != 0 {
            return None;
        }
        if self.coeff.is_zero() {
            return Some(self.clone());
        }
        for (n, a, b) in [(1i64, 0, 0), (2, 1, 0), (3, 0, 1), (6, 1, 1)] {
            let scaled = &self.coeff / BigRational::from_integer(BigInt::from(n));
            if let Some(r) = rational_sqrt(&scaled) {
                return Some(Self::from_parts(r, a, b, self.pi_halves / 2));
            }
        }
        None
    }

    /// `self^{k/2}` when it stays inside the ring.
    pub fn pow_half(&self, k: i32) -> Option<Self> {
        if k % 2 == 0 {
            return Some(self.powi(k / 2));
        }
        Some(self.sqrt()?.powi(k))
    }

    /// `r^{e}` for rational `r > 0` and rational `e` with denominator 1 or 2.
    pub fn rational_pow(r: &BigRational, e: &BigRational) -> Option<Self> {
        use num_traits::ToPrimitive;
        let twice = e * BigRational::from_integer(2.into());
        if !twice.is_integer() {
            return None;
        }
        let k = twice.to_integer().to_i32()?;
        Self::rational(r.clone()).pow_half(k)
    }

    pub fn to_f64(&self) -> f64 {
        let mut v = rat_to_f64(&self.coeff);
        if self.sqrt2 == 1 {
            v *= std::f64::consts::SQRT_2;
        }
        if self.sqrt3 == 1 {
            v *= 3f64.sqrt();
        }
        v * std::f64::consts::PI.powf(f64::from(self.pi_halves) / 2.0)
    }
}

/// `Gamma(a)` for a positive integer or half-integer `a`.
pub fn gamma_symbolic(a: &BigRational) -> Option<SymbolicConstant> {
    use num_traits::ToPrimitive;
    if !a.is_positive() {
        return None;
    }
    let twice = a * BigRational::from_integer(2.into());
    if !twice.is_integer() {
        return None;
    }
    let k = twice.to_integer().to_u64()?;
    if k % 2 == 0 {
        // Gamma(n) = (n-1)!
        return Some(SymbolicConstant::rational(BigRational::from_integer(super::factorial(k / 2 - 1))));
    }
    // Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi)
    let n = (k - 1) / 2;
    let num = super::factorial(2 * n);
    let den = BigInt::from(4).pow(n as u32) * super::factorial(n);
    Some(SymbolicConstant::from_parts(BigRational::new(num, den), 0, 0, 1))
}

fn pow_i(r: &BigRational, e: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= r;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = r.numer();
    let d = r.denom();
    if n.is_negative() {
        return None;
    }
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

impl fmt::Display for SymbolicConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "0");
        }
        let neg = self.coeff.is_negative();
        let numer = self.coeff.numer().abs();
        let denom = self.coeff.denom().clone();

        let mut top: Vec<String> = Vec::new();
        let radical = match (self.sqrt2, self.sqrt3) {
            (1, 1) => Some("sqrt(6)"),
            (1, 0) => Some("sqrt(2)"),
            (0, 1) => Some("sqrt(3)"),
            _ => None,
        };
        if !numer.is_one() || (radical.is_none() && self.pi_halves <= 0) {
            top.push(numer.to_string());
        }
        if let Some(r) = radical {
            top.push(r.to_string());
        }
        let pi_str = |k: i32| match k {
            1 => "sqrt(pi)".to_string(),
            2 => "pi".to_string(),
            k if k % 2 == 0 => format!("pi^{}", k / 2),
            k => format!("pi^({}/2)", k),
        };
        let mut bottom: Vec<String> = Vec::new();
        if self.pi_halves > 0 {
            top.push(pi_str(self.pi_halves));
        }
        if !denom.is_one() {
            bottom.push(denom.to_string());
        }
        if self.pi_halves < 0 {
            bottom.push(pi_str(-self.pi_halves));
        }
        if neg {
            write!(f, "-")?;
        }
        write!(f, "{}", top.join("*"))?;
        match bottom.len() {
            0 => Ok(()),
            1 => write!(f, "/{}", bottom[0]),
            _ => write!(f, "/({})", bottom.join("*")),
        }
    }
}

impl fmt::Debug for SymbolicConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
