//! Power series about the origin, in double and double-double precision.

use num_complex::Complex64;

use crate::dd::{Dd, DdComplex};

/// `Ai(0)`.
pub const AI0: f64 = 0.355_028_053_887_817_24;
/// `-Ai'(0)`.
pub const MINUS_AIP0: f64 = 0.258_819_403_792_806_8;

const AI0_DD: Dd = Dd::new(0.3550280538878172, 2.05233632436212e-17);
const MINUS_AIP0_DD: Dd = Dd::new(0.2588194037928068, -2.522243111610832e-17);
const SQRT3_DD: Dd = Dd::new(1.7320508075688772, 1.0035084221806903e-16);

/// The six Airy values at one point, unscaled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Six<T> {
    pub ai: T,
    pub aip: T,
    pub bi: T,
    pub bip: T,
    pub aint: T,
    pub bint: T,
}

/// Maclaurin evaluation; accurate to a few ulps times `e^{(2/3)|z|^{3/2}} |Ai(z)|^{-1}`
/// relative, so it is used for `|z| <= 2` in double precision.
pub fn six(z: Complex64) -> Six<Complex64> {
    let z2 = z * z;
    let z3 = z2 * z;
    let (mut f, mut fp, mut big_f) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), z);
    let (mut g, mut gp, mut big_g) = (z, Complex64::new(1.0, 0.0), z2 * 0.5);
    let (mut tf, mut tg) = (Complex64::new(1.0, 0.0), z);
    let mut peak = 1.0f64.max(z.norm());
    for k in 1..200 {
        let k3 = 3.0 * k as f64;
        fp += tf * z2 / (k3 - 1.0);
        gp += tg * z2 / k3;
        tf *= z3 / ((k3 - 1.0) * k3);
        tg *= z3 / (k3 * (k3 + 1.0));
        f += tf;
        g += tg;
        big_f += tf * z / (k3 + 1.0);
        big_g += tg * z / (k3 + 2.0);
        let size = tf.norm() + tg.norm();
        peak = peak.max(size);
        if size * (1.0 + z2.norm()) < 1e-18 * peak {
            break;
        }
    }
    let (c1, c2) = (AI0, MINUS_AIP0);
    let s3 = 3f64.sqrt();
    Six {
        ai: f * c1 - g * c2,
        aip: fp * c1 - gp * c2,
        bi: (f * c1 + g * c2) * s3,
        bip: (fp * c1 + gp * c2) * s3,
        aint: Complex64::new(1.0 / 3.0, 0.0) - (big_f * c1 - big_g * c2),
        bint: (big_f * c1 + big_g * c2) * s3,
    }
}

/// Maclaurin evaluation in double-double arithmetic. Relative accuracy is
/// about `1e-32` times the cancellation factor, which stays below `1e13`
/// for `|z| <= 8` and below `1e25` for `|z| <= 12`.
pub fn six_dd(z: DdComplex) -> Six<DdComplex> {
    let z2 = z * z;
    let z3 = z2 * z;
    let one = DdComplex::ONE;
    let (mut f, mut fp, mut big_f) = (one, DdComplex::ZERO, z);
    let (mut g, mut gp, mut big_g) = (z, one, z2.scale_f64(0.5));
    let (mut tf, mut tg) = (one, z);
    let mut peak = 1.0f64.max(z.norm_f64());
    let z2n = z2.norm_f64();
    for k in 1..400 {
        let k3 = 3.0 * k as f64;
        fp = fp + (tf * z2).div_f64(k3 - 1.0);
        gp = gp + (tg * z2).div_f64(k3);
        tf = (tf * z3).div_f64((k3 - 1.0) * k3);
        tg = (tg * z3).div_f64(k3 * (k3 + 1.0));
        f = f + tf;
        g = g + tg;
        big_f = big_f + (tf * z).div_f64(k3 + 1.0);
        big_g = big_g + (tg * z).div_f64(k3 + 2.0);
        let size = tf.norm_f64() + tg.norm_f64();
        peak = peak.max(size);
        if size * (1.0 + z2n) < 1e-34 * peak {
            break;
        }
    }
    let (c1, c2) = (AI0_DD, MINUS_AIP0_DD);
    let third = DdComplex::from_real(Dd::ONE.div_f64(3.0));
    Six {
        ai: f.scale(c1) - g.scale(c2),
        aip: fp.scale(c1) - gp.scale(c2),
        bi: (f.scale(c1) + g.scale(c2)).scale(SQRT3_DD),
        bip: (fp.scale(c1) + gp.scale(c2)).scale(SQRT3_DD),
        aint: third - (big_f.scale(c1) - big_g.scale(c2)),
        bint: (big_f.scale(c1) + big_g.scale(c2)).scale(SQRT3_DD),
    }
}
