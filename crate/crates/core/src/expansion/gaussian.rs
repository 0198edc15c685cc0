//! Moments of the complex Gaussian weight `exp(-2b u^2 + 2ib uv - b v^2)`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::exact::{q, Qi, SymbolicConstant};

/// `int int u^m v^n e^{-2bu^2 + 2ibuv - bv^2} du dv = coefficient * normalization`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianMoment {
    pub coefficient: Qi,
    /// `pi / (sqrt(3) b)`, the integral of the weight itself.
    pub normalization: SymbolicConstant,
}

/// Table of normalised moments `E[u^m v^n]` for `m + n <= max_degree`,
/// filled by Isserlis pairing with covariance
/// `[[1/(6b), i/(6b)], [i/(6b), 1/(3b)]]`.
pub struct MomentTable {
    max_degree: usize,
    table: Vec<Vec<Qi>>,
}

impl MomentTable {
    pub fn new(b: &BigRational, max_degree: usize) -> Self {
        let suu = Qi::real(q(1, 6) / b);
        let suv = Qi::new(BigRational::zero(), q(1, 6) / b);
        let svv = Qi::real(q(1, 3) / b);
        let d = max_degree;
        let mut table = vec![vec![Qi::default(); d + 1]; d + 1];
        table[0][0] = Qi::from_int(1);
        for total in 1..=d {
            for m in 0..=total {
                let n = total - m;
                let val = if m >= 1 {
                    // Pair the first u with the remaining u's and with each v.
                    let mut acc = Qi::default();
                    if m >= 2 {
                        acc.add_assign_ref(&table[m - 2][n].mul_ref(&suu).scale(&q(m as i64 - 1, 1)));
                    }
                    if n >= 1 {
                        acc.add_assign_ref(&table[m - 1][n - 1].mul_ref(&suv).scale(&q(n as i64, 1)));
                    }
                    acc
                } else if n >= 2 {
                    table[0][n - 2].mul_ref(&svv).scale(&q(n as i64 - 1, 1))
                } else {
                    Qi::default()
                };
                table[m][n] = val;
            }
        }
        MomentTable { max_degree, table }
    }

    pub fn get(&self, m: u32, n: u32) -> Qi {
        let (m, n) = (m as usize, n as usize);
        assert!(m + n <= self.max_degree, "moment table too small for degree {}", m + n);
        self.table[m][n].clone()
    }
}

/// `pi / (sqrt(3) b)`.
pub fn gaussian_normalization(b: &BigRational) -> SymbolicConstant {
    SymbolicConstant::from_parts(b.recip(), 0, -1, 2)
}

pub fn gaussian_moment(m: u32, n: u32, b: &BigRational) -> GaussianMoment {
    let table = MomentTable::new(b, (m + n) as usize);
    GaussianMoment {
        coefficient: table.get(m, n),
        normalization: gaussian_normalization(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_moments() {
        let b = q(3, 1);
        let g = gaussian_moment(0, 0, &b);
        assert_eq!(g.coefficient, Qi::from_int(1));
        assert!((g.normalization.to_f64() - std::f64::consts::PI / (3f64.sqrt() * 3.0)).abs() < 1e-15);
        assert!(gaussian_moment(1, 0, &b).coefficient.is_zero());
        assert!(gaussian_moment(0, 1, &b).coefficient.is_zero());
        assert_eq!(gaussian_moment(2, 0, &b).coefficient, Qi::real(q(1, 18)));
        assert_eq!(gaussian_moment(1, 1, &b).coefficient, Qi::new(q(0, 1), q(1, 18)));
        // E[u^4] = 3 s_uu^2
        assert_eq!(gaussian_moment(4, 0, &b).coefficient, Qi::real(q(3, 324)));
    }
}
