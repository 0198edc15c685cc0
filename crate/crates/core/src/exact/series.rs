use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::Field;

/// The variable a [`FormalSeries`] is expanded in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesVar {
    /// `t = z^{-3/2}`, used by the Airy asymptotic series.
    T,
    /// `x^{-1}`, used by density and tail expansions.
    InvX,
    /// An angle, for trigonometric building blocks.
    Theta,
}

/// Truncated power series `sum_{k <= order} c_k var^k` with exact coefficients.
///
/// Binary operations keep the smaller of the two truncation orders, so a
/// result never claims more terms than its inputs determine.
#[derive(Clone, PartialEq)]
pub struct FormalSeries<C> {
    coeffs: Vec<C>,
    var: SeriesVar,
}

impl<C: Field> FormalSeries<C> {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    pub fn new(var: SeriesVar, coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        FormalSeries { coeffs, var }
    }

    pub fn constant(var: SeriesVar, c: C, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = c;
        FormalSeries { coeffs, var }
    }

    pub fn one(var: SeriesVar, order: usize) -> Self {
        Self::constant(var, C::one(), order)
    }

    /// The series `var` itself, truncated at `order`.
    pub fn variable(var: SeriesVar, order: usize) -> Self {
        let mut s = Self::constant(var, C::zero(), order);
        if order >= 1 {
            s.coeffs[1] = C::one();
        }
        s
    }

    pub fn var(&self) -> SeriesVar {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        FormalSeries {
            coeffs: self.coeffs[..=n].to_vec(),
            var: self.var,
        }
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(self.var, other.var, "series in different variables");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_var(other);
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| self.coeffs[k].clone() + other.coeffs[k].clone())
            .collect();
        FormalSeries { coeffs, var: self.var }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            var: self.var,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            var: self.var,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_var(other);
        let n = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        FormalSeries { coeffs, var: self.var }
    }

    /// Multiplicative inverse; `None` when the constant term vanishes.
    pub fn invert(&self) -> Option<Self> {
        self.pow_rational(&BigRational::from_integer(BigInt::from(-1)))
    }

    /// `self^a` for rational `a`, normalised so the constant term of the
    /// result is `c_0^a` when `c_0 = 1` (other constant terms are only
    /// accepted for integer `a`).
    pub fn pow_rational(&self, a: &BigRational) -> Option<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return None;
        }
        let lead = if c0 == C::one() {
            C::one()
        } else if a.is_integer() {
            int_pow(&c0, a.numer())
        } else {
            return None;
        };
        // Miller's recurrence: b_n = (1/(n c_0)) sum_k ((a+1)k - n) c_k b_{n-k}.
        let n_max = self.order();
        let mut out = vec![C::zero(); n_max + 1];
        out[0] = lead;
        let ap1 = C::from_rational(a + BigRational::from_integer(1.into()));
        for n in 1..=n_max {
            let mut acc = C::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let weight = ap1.clone() * C::from_rational(BigRational::from_integer(BigInt::from(k)))
                    - C::from_rational(BigRational::from_integer(BigInt::from(n)));
                acc = acc + weight * self.coeffs[k].clone() * out[n - k].clone();
            }
            out[n] = acc / (C::from_rational(BigRational::from_integer(BigInt::from(n))) * c0.clone());
        }
        Some(FormalSeries { coeffs: out, var: self.var })
    }

    /// `exp(self)`; requires a vanishing constant term.
    pub fn exp(&self) -> Option<Self> {
        if !self.coeffs[0].is_zero() {
            return None;
        }
        let n_max = self.order();
        let mut out = vec![C::zero(); n_max + 1];
        out[0] = C::one();
        for n in 1..=n_max {
            let mut acc = C::zero();
            for k in 1..=n {
                let kk = C::from_rational(BigRational::from_integer(BigInt::from(k)));
                acc = acc + kk * self.coeffs[k].clone() * out[n - k].clone();
            }
            out[n] = acc / C::from_rational(BigRational::from_integer(BigInt::from(n)));
        }
        Some(FormalSeries { coeffs: out, var: self.var })
    }

    /// `self(inner)`, where `inner` has zero constant term. The result keeps
    /// the smaller truncation order.
    pub fn compose(&self, inner: &Self) -> Option<Self> {
        if !inner.coeffs[0].is_zero() {
            return None;
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = FormalSeries::constant(inner.var, self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Some(acc)
    }

    /// `f(c t)` for a constant `c`.
    pub fn rescale_var(&self, c: &C) -> Self {
        let mut p = C::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.clone() * p.clone());
            p = p * c.clone();
        }
        FormalSeries { coeffs, var: self.var }
    }

    /// Maps coefficients into another field.
    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D) -> FormalSeries<D> {
        FormalSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
            var: self.var,
        }
    }
}

fn int_pow<C: Field>(c: &C, e: &BigInt) -> C {
    use num_traits::{Signed, ToPrimitive};
    let n = e.abs().to_u32().expect("exponent fits in u32");
    let mut acc = C::one();
    for _ in 0..n {
        acc = acc * c.clone();
    }
    if e.is_negative() {
        C::one() / acc
    } else {
        acc
    }
}

impl<C: fmt::Debug> fmt::Debug for FormalSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FormalSeries<{:?}>{:?}", self.var, self.coeffs)
    }
}
