use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient field for [`super::FormalSeries`].
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(r: BigRational) -> Self;
}

impl Field for BigRational {
    fn from_rational(r: BigRational) -> Self {
        r
    }
}

/// Gaussian rational `re + i im` with exact components.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Qi {
    pub re: BigRational,
    pub im: BigRational,
}

impl Qi {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Qi { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Qi {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        Qi {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Qi::real(BigRational::one()),
            1 => Qi::i(),
            2 => Qi::real(-BigRational::one()),
            _ => -Qi::i(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Qi::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Qi {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Qi {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    pub fn mul_ref(&self, b: &Qi) -> Qi {
        if self.im.is_zero() && b.im.is_zero() {
            return Qi::real(&self.re * &b.re);
        }
        Qi {
            re: &self.re * &b.re - &self.im * &b.im,
            im: &self.re * &b.im + &self.im * &b.re,
        }
    }

    pub fn add_assign_ref(&mut self, b: &Qi) {
        self.re += &b.re;
        self.im += &b.im;
    }
}

impl fmt::Debug for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "({} + {}i)", self.re, self.im)
        }
    }
}

impl fmt::Display for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for Qi {
    type Output = Qi;
    fn add(self, b: Qi) -> Qi {
        Qi {
            re: self.re + b.re,
            im: self.im + b.im,
        }
    }
}

impl Sub for Qi {
    type Output = Qi;
    fn sub(self, b: Qi) -> Qi {
        Qi {
            re: self.re - b.re,
            im: self.im - b.im,
        }
    }
}

impl Mul for Qi {
    type Output = Qi;
    fn mul(self, b: Qi) -> Qi {
        self.mul_ref(&b)
    }
}

impl Div for Qi {
    type Output = Qi;
    fn div(self, b: Qi) -> Qi {
        let d = &b.re * &b.re + &b.im * &b.im;
        let n = self.mul_ref(&b.conj());
        Qi {
            re: n.re / &d,
            im: n.im / d,
        }
    }
}

impl Neg for Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        Qi {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Zero for Qi {
    fn zero() -> Self {
        Qi::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Qi {
    fn one() -> Self {
        Qi::real(BigRational::one())
    }
}

impl Field for Qi {
    fn from_rational(r: BigRational) -> Self {
        Qi::real(r)
    }
}
