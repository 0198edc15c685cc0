//! Exact coefficients of the normalised asymptotic series of `Bi`, `Bi'` and `BI`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{q, FormalSeries, SeriesVar};

/// Which series: `beta_{-1}` (for `BI`), `beta_0` (for `Bi`) or `beta_1` (for `Bi'`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BetaKind {
    MinusOne,
    Zero,
    One,
}

/// Coefficients `c_k = Gamma(3k+1/2) / (54^k k! Gamma(k+1/2)) * (3/2)^k` for `k <= order`.
fn beta0_coeffs(order: usize) -> Vec<BigRational> {
    // u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / ((2k-1) 216 k), c_k = u_k (3/2)^k.
    let mut out = Vec::with_capacity(order + 1);
    let mut c = BigRational::one();
    out.push(c.clone());
    for k in 1..=order as i64 {
        c = c * q((6 * k - 5) * (6 * k - 3) * (6 * k - 1) * 3, (2 * k - 1) * 216 * k * 2);
        out.push(c.clone());
    }
    out
}

/// The series `beta_kind(t)` in `t = z^{-3/2}` up to `t^order`.
pub fn beta_series(kind: BetaKind, order: usize) -> Result<FormalSeries<BigRational>> {
    if order < 1 {
        return Err(Error::Domain("beta_series needs order >= 1".into()));
    }
    let c = beta0_coeffs(order);
    let coeffs = match kind {
        BetaKind::Zero => c,
        BetaKind::One => c
            .iter()
            .enumerate()
            .map(|(k, ck)| {
                if k == 0 {
                    ck.clone()
                } else {
                    let k = k as i64;
                    -ck * q(6 * k + 1, 6 * k - 1)
                }
            })
            .collect(),
        BetaKind::MinusOne => {
            // Differentiating z^{-3/4} e^{zeta} beta_{-1} must give z^{-1/4} e^{zeta} beta_0,
            // which forces e_m = c_m + ((6m-3)/4) e_{m-1}.
            let mut e = Vec::with_capacity(order + 1);
            e.push(BigRational::one());
            for m in 1..=order {
                let prev = e[m - 1].clone();
                let mi = BigInt::from(m as i64);
                let w = BigRational::new(BigInt::from(6) * mi - 3, BigInt::from(4));
                e.push(&c[m] + w * prev);
            }
            e
        }
    };
    Ok(FormalSeries::new(SeriesVar::T, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn first_two(kind: BetaKind) -> (BigRational, BigRational) {
        let s = beta_series(kind, 2).unwrap();
        (s.coeff(1).clone(), s.coeff(2).clone())
    }

    #[test]
    fn printed_coefficients() {
        assert_eq!(first_two(BetaKind::Zero), (q(5, 48), q(385, 4608)));
        assert_eq!(first_two(BetaKind::One), (q(-7, 48), q(-455, 4608)));
        assert_eq!(first_two(BetaKind::MinusOne), (q(41, 48), q(9241, 4608)));
    }

    #[test]
    fn order_zero_rejected() {
        assert!(beta_series(BetaKind::Zero, 0).is_err());
    }
}
