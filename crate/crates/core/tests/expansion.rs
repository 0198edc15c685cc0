use std::time::Instant;

use brownian_area::exact::{q, Qi};
use brownian_area::expansion::{
    collected_coefficients, density_expansion, gaussian_moment, negative_derivative, positive_part_ratio, scaled_expansion,
    tail_expansion, unscale,
};
use brownian_area::kernels::AreaKind;
use num_rational::BigRational;
use num_traits::Zero;

type Quad = [(i64, i64); 4];

// (kind, density prefactor, density corrections, tail prefactor, tail corrections)
const PUBLISHED: [(AreaKind, &str, Quad, &str, Quad); 7] = [
    (AreaKind::Excursion, "72*sqrt(6)/sqrt(pi)", [(1, 1), (-1, 9), (-5, 1296), (-25, 46656)],
        "6*sqrt(6)/sqrt(pi)", [(1, 1), (-1, 36), (-1, 648), (-7, 46656)]),
    (AreaKind::Bridge, "2*sqrt(6)/sqrt(pi)", [(1, 1), (1, 18), (1, 432), (25, 46656)],
        "sqrt(6)/(6*sqrt(pi))", [(1, 1), (-1, 36), (1, 108), (-155, 46656)]),
    (AreaKind::Motion, "sqrt(6)/sqrt(pi)", [(1, 1), (1, 18), (-1, 162), (49, 5832)],
        "sqrt(6)/(3*sqrt(pi))", [(1, 1), (-5, 18), (22, 81), (-2591, 5832)]),
    (AreaKind::Meander, "3*sqrt(3)", [(1, 1), (-1, 18), (-1, 162), (5, 5832)],
        "sqrt(3)", [(1, 1), (-1, 18), (5, 162), (-235, 5832)]),
    (AreaKind::DoubleMeander, "2*sqrt(6)/sqrt(pi)", [(1, 1), (1, 6), (1, 18), (29, 648)],
        "2*sqrt(6)/(3*sqrt(pi))", [(1, 1), (-1, 6), (2, 9), (-211, 648)]),
    (AreaKind::BridgePositive, "sqrt(6)/sqrt(pi)", [(1, 1), (1, 36), (-7, 5184), (17, 46656)],
        "sqrt(6)/(12*sqrt(pi))", [(1, 1), (-1, 18), (65, 5184), (-907, 186624)]),
    (AreaKind::MotionPositive, "sqrt(6)/(2*sqrt(pi))", [(1, 1), (1, 36), (-5, 648), (109, 15552)],
        "sqrt(6)/(6*sqrt(pi))", [(1, 1), (-11, 36), (193, 648), (-2537, 5184)]),
];

fn rats(c: &Quad) -> Vec<BigRational> {
    c.iter().map(|&(n, d)| q(n, d)).collect()
}

#[test]
fn published_density_and_tail_coefficients() {
    let start = Instant::now();
    for (kind, dpre, dc, tpre, tc) in PUBLISHED {
        let d = density_expansion(kind, 3).unwrap();
        assert_eq!(d.corrections, rats(&dc), "{kind} density");
        assert_eq!(d.prefactor.to_string(), dpre, "{kind} density prefactor");
        let t = tail_expansion(&d).unwrap();
        assert_eq!(t.corrections, rats(&tc), "{kind} tail");
        assert_eq!(t.prefactor.to_string(), tpre, "{kind} tail prefactor");
    }
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn leading_powers_and_rates() {
    let expect = [
        (AreaKind::Excursion, 2, 12), (AreaKind::Bridge, 0, 12), (AreaKind::Motion, 0, 3),
        (AreaKind::Meander, 1, 3), (AreaKind::DoubleMeander, 0, 3),
        (AreaKind::BridgePositive, 0, 12), (AreaKind::MotionPositive, 0, 3),
    ];
    for (kind, alpha, twice_b) in expect {
        let d = density_expansion(kind, 0).unwrap();
        assert_eq!(d.alpha, q(alpha, 1), "{kind}");
        assert_eq!(d.b, q(twice_b, 2), "{kind}");
    }
}

#[test]
fn odd_and_imaginary_parts_vanish_to_twelfth_order() {
    let start = Instant::now();
    for kind in AreaKind::ALL {
        let raw = collected_coefficients(kind, 12).unwrap();
        for (j, c) in raw.iter().enumerate() {
            assert!(c.im.is_zero(), "{kind}: imaginary part at x^-{j}");
            if j % 2 == 1 {
                assert!(c.re.is_zero(), "{kind}: odd coefficient at x^-{j}");
            }
        }
    }
    scaled_expansion(AreaKind::DoubleMeander, 6).unwrap();
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn tail_round_trip() {
    for kind in AreaKind::ALL {
        let d = density_expansion(kind, 5).unwrap();
        let t = tail_expansion(&d).unwrap();
        assert_eq!(negative_derivative(&t), d);
        assert_eq!(t.prefactor, d.prefactor.scale(&(&d.b * q(2, 1)).recip()));
        assert_eq!(t.alpha, &d.alpha - q(1, 1));
    }
}

#[test]
fn conversion_matches_scaled_values() {
    for kind in AreaKind::ALL {
        let s = scaled_expansion(kind, 3).unwrap();
        let d = unscale(&s).unwrap();
        for x in [1.5, 2.0, 3.0] {
            let direct = 2f64.sqrt() * s.eval(2f64.sqrt() * x);
            let rel = (d.eval(x) - direct).abs() / direct;
            assert!(rel < 1e-13, "{kind} at {x}: {rel}");
        }
    }
}

#[test]
fn positive_part_halving() {
    for (full, pos) in [(AreaKind::Bridge, AreaKind::BridgePositive), (AreaKind::Motion, AreaKind::MotionPositive)] {
        let f = density_expansion(full, 1).unwrap();
        let p = density_expansion(pos, 1).unwrap();
        assert_eq!(f.prefactor, p.prefactor.scale(&q(2, 1)));
        let ratio = positive_part_ratio(full, pos, 2).unwrap();
        assert_eq!(ratio[0], q(1, 1));
        assert_eq!(ratio[1], q(1, 36), "{full}");
    }
}

#[test]
fn gaussian_moments_against_quadrature() {
    // Midpoint rule on a box wide enough for the weight at b = 3.
    let b = 3.0;
    let h = 0.01;
    let (mut re0, mut re2) = (0.0, 0.0);
    let n = 600;
    for i in -n..n {
        let u = (i as f64 + 0.5) * h;
        for j in -n..n {
            let v = (j as f64 + 0.5) * h;
            let (mag, ph) = ((-2.0 * b * u * u - b * v * v).exp(), 2.0 * b * u * v);
            let w = mag * ph.cos();
            re0 += w * h * h;
            re2 += u * u * w * h * h;
        }
    }
    let g0 = gaussian_moment(0, 0, &q(3, 1));
    assert_eq!(g0.coefficient, Qi::from_int(1));
    assert!((g0.normalization.to_f64() - re0).abs() < 1e-10);
    let g2 = gaussian_moment(2, 0, &q(3, 1));
    assert_eq!(g2.coefficient, Qi::real(q(1, 18)));
    assert!((g0.normalization.to_f64() / 18.0 - re2).abs() < 1e-10);
}
