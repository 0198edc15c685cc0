use brownian_area::exact::{q, SymbolicConstant};
use brownian_area::kernels::AreaKind;
use brownian_area::moments::{
    excursion_moment, moment_asymptotic, moment_constant, moment_correction, moment_from_density, moment_record,
    takacs_k, takacs_k_table, takacs_ratio, DensityGrid,
};
use brownian_area::Error;
use num_traits::Signed;
use proptest::prelude::*;

#[test]
fn recursion_values() {
    assert_eq!(takacs_k(0), q(-1, 2));
    assert_eq!(takacs_k(1), q(1, 8));
    assert_eq!(takacs_k(3), q(15, 128));
    assert!(takacs_k_table(60).iter().skip(1).all(|k| k.is_positive()));
}

#[test]
fn low_excursion_moments() {
    // sqrt(pi/8), 5/12, 15 sqrt(2 pi)/128, 221/1008
    let sqrt_2pi = SymbolicConstant::from_parts(q(1, 1), 1, 0, 1);
    assert_eq!(excursion_moment(1).unwrap(), sqrt_2pi.scale(&q(1, 4)));
    assert_eq!(excursion_moment(2).unwrap(), SymbolicConstant::rational(q(5, 12)));
    assert_eq!(excursion_moment(3).unwrap(), sqrt_2pi.scale(&q(15, 128)));
    assert_eq!(excursion_moment(4).unwrap(), SymbolicConstant::rational(q(221, 1008)));
    assert!(matches!(excursion_moment(0), Err(Error::Domain(_))));
}

#[test]
fn refined_recursion_asymptotics() {
    for n in [50usize, 100] {
        let nf = n as f64;
        let r = takacs_ratio(n).unwrap();
        assert!((r - (1.0 - 5.0 / (18.0 * nf))).abs() < 3.0 / (nf * nf), "n = {n}: ratio {r}");
    }
}

#[test]
fn corollary_constants() {
    let s2 = SymbolicConstant::from_parts(q(1, 1), 1, 0, 0);
    let expect = [
        (AreaKind::Excursion, s2.scale(&q(3, 1))),
        (AreaKind::Bridge, s2.clone()),
        (AreaKind::Motion, s2.clone()),
        (AreaKind::Meander, SymbolicConstant::from_parts(q(1, 1), 0, 1, 1)),
        (AreaKind::DoubleMeander, s2.scale(&q(2, 1))),
        (AreaKind::BridgePositive, s2.scale(&q(1, 2))),
        (AreaKind::MotionPositive, s2.scale(&q(1, 2))),
    ];
    for (kind, c) in expect {
        assert_eq!(moment_constant(kind).unwrap(), c, "{kind}");
    }
}

#[test]
fn refined_excursion_asymptotics_converge() {
    assert_eq!(moment_correction(AreaKind::Excursion).unwrap(), q(-5, 12));
    let mut last_lead = f64::INFINITY;
    let mut last_refined = f64::INFINITY;
    for n in [10usize, 20, 40] {
        let exact = excursion_moment(n).unwrap().to_f64();
        let lead = (moment_asymptotic(AreaKind::Excursion, n, false).unwrap() / exact - 1.0).abs();
        let refined = (moment_asymptotic(AreaKind::Excursion, n, true).unwrap() / exact - 1.0).abs();
        assert!(lead < last_lead && refined < last_refined && refined < lead, "n = {n}");
        assert!(lead < 0.7 / n as f64 && refined < 2.0 / (n * n) as f64, "n = {n}: {lead:e} {refined:e}");
        last_lead = lead;
        last_refined = refined;
    }
}

#[test]
fn leading_moment_forms() {
    let n = 7usize;
    let nf = n as f64;
    let e = std::f64::consts::E;
    let br = moment_asymptotic(AreaKind::Bridge, n, false).unwrap();
    assert!((br / (2f64.sqrt() * (nf / (12.0 * e)).powf(nf / 2.0)) - 1.0).abs() < 1e-13);
    let me = moment_asymptotic(AreaKind::Meander, n, false).unwrap();
    let want = (3.0 * std::f64::consts::PI).sqrt() * nf.sqrt() * (nf / (3.0 * e)).powf(nf / 2.0);
    assert!((me / want - 1.0).abs() < 1e-13);
    assert!(matches!(moment_asymptotic(AreaKind::Meander, n, true), Err(Error::Unsupported(_))));
}

#[test]
fn numeric_moments_are_range_checked() {
    let cfg = DensityGrid::default_config();
    assert!(matches!(moment_from_density(AreaKind::Bridge, 0, &cfg), Err(Error::Domain(_))));
    assert!(matches!(moment_from_density(AreaKind::Bridge, 7, &cfg), Err(Error::Domain(_))));
}

#[test]
fn record_serializes_exact_values_as_strings() {
    let r = moment_record(AreaKind::Excursion, 2, None).unwrap();
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["exact"]["symbolic"], "5/12");
    assert_eq!(json["exact"]["exact"], true);
    assert!(json["asymptotic"]["est_error"].as_f64().unwrap() > 0.0);
    assert_eq!(json["kind"], "excursion");
    assert!(json.get("numeric").is_none());
    let b = moment_record(AreaKind::Bridge, 2, None).unwrap();
    assert!(b.exact.is_none() && b.refined.is_none());
}

proptest! {
    #[test]
    fn recursion_matches_its_definition(n in 2usize..40) {
        let k = takacs_k_table(n);
        let mut rhs = q(3 * n as i64 - 4, 4) * &k[n - 1];
        for j in 1..n {
            rhs += &k[j] * &k[n - j];
        }
        prop_assert_eq!(&k[n], &rhs);
    }

    #[test]
    fn exact_moments_are_log_convex(n in 2usize..30) {
        // Lyapunov: (E X^n)^2 <= E X^{n-1} E X^{n+1}.
        let a = excursion_moment(n - 1).unwrap().to_f64();
        let b = excursion_moment(n).unwrap().to_f64();
        let c = excursion_moment(n + 1).unwrap().to_f64();
        prop_assert!(b * b <= a * c * (1.0 + 1e-12));
    }
}
