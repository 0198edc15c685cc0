//! Series in `eps = 1/x` whose coefficients are polynomials in `(u, v)`
//! over the Gaussian rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{FormalSeries, Qi};

/// Polynomial in `(u, v)`, keyed by the exponent pair.
#[derive(Clone, PartialEq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Qi>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn constant(c: Qi) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Qi, m: u32, n: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((m, n), c);
        }
        Poly2 { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Qi)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: u32, n: u32) -> Qi {
        self.terms.get(&(m, n)).cloned().unwrap_or_default()
    }

    /// Total degree of every monomial, if the polynomial is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|(m, n)| m + n);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, key: (u32, u32), c: Qi) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(e) => {
                e.add_assign_ref(&c);
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Poly2) {
        for (k, c) in &other.terms {
            self.add_term(*k, c.clone());
        }
    }

    pub fn scale(&self, c: &Qi) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(k, a)| (*k, a.mul_ref(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for ((m1, n1), a) in &self.terms {
            for ((m2, n2), b) in &other.terms {
                out.add_term((m1 + m2, n1 + n2), a.mul_ref(b));
            }
        }
        out
    }

    /// Applies a linear functional given on monomials.
    pub fn integrate(&self, moment: impl Fn(u32, u32) -> Qi) -> Qi {
        let mut acc = Qi::zero();
        for ((m, n), c) in &self.terms {
            acc.add_assign_ref(&c.mul_ref(&moment(*m, *n)));
        }
        acc
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((m, n), c)| format!("{c:?} u^{m} v^{n}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `sum_{j <= order} p_j(u, v) eps^j`.
#[derive(Clone, PartialEq, Debug)]
pub struct BivariateSeries {
    coeffs: Vec<Poly2>,
}

impl BivariateSeries {
    pub fn new(coeffs: Vec<Poly2>) -> Self {
        assert!(!coeffs.is_empty());
        BivariateSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![Poly2::zero(); order + 1];
        coeffs[0] = Poly2::constant(Qi::one());
        BivariateSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &Poly2 {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[Poly2] {
        &self.coeffs
    }

    /// `f(2 v eps)` for a series `f` in an angle: the substitution `theta = 2 v / x`.
    pub fn from_angle(f: &FormalSeries<Qi>, order: usize) -> Self {
        let two = BigRational::from_integer(2.into());
        let mut coeffs = vec![Poly2::zero(); order + 1];
        let mut p = BigRational::one();
        for (k, slot) in coeffs.iter_mut().enumerate() {
            if k <= f.order() {
                *slot = Poly2::monomial(f.coeff(k).scale(&p), 0, k as u32);
            }
            p *= &two;
        }
        BivariateSeries { coeffs }
    }

    /// `(1 + u eps)^a`.
    pub fn one_plus_u_pow(a: &BigRational, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| Poly2::monomial(Qi::real(crate::exact::binomial(a, k)), k as u32, 0))
            .collect();
        BivariateSeries { coeffs }
    }

    pub fn scale(&self, c: &Qi) -> Self {
        BivariateSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|j| {
                let mut p = self.coeffs[j].clone();
                p.add_assign(&other.coeffs[j]);
                p
            })
            .collect();
        BivariateSeries { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Poly2::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul(&other.coeffs[j]);
                coeffs[i + j].add_assign(&prod);
            }
        }
        BivariateSeries { coeffs }
    }

    /// Multiplies by `eps^k`, dropping terms beyond the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![Poly2::zero(); n + 1];
        for j in 0..=n {
            if j + k <= n {
                coeffs[j + k] = self.coeffs[j].clone();
            }
        }
        BivariateSeries { coeffs }
    }

    /// `exp(self)` for a series without constant term.
    pub fn exp(&self) -> Option<Self> {
        if !self.coeffs[0].is_zero() {
            return None;
        }
        let n = self.order();
        let mut out = vec![Poly2::zero(); n + 1];
        out[0] = Poly2::constant(Qi::one());
        for m in 1..=n {
            let mut acc = Poly2::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k].mul(&out[m - k]).scale(&Qi::from_int(k as i64));
                acc.add_assign(&term);
            }
            out[m] = acc.scale(&Qi::real(BigRational::new(1.into(), (m as i64).into())));
        }
        Some(BivariateSeries { coeffs: out })
    }
}
