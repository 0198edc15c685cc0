use std::f64::consts::{FRAC_PI_3, PI};

use brownian_area::airy::{airy_bundle_polar, bi_partial_sum, connection_rotate, AiryBundle, Rotation, Scaling};
use brownian_area::scalar::zeta_polar;
use num_complex::Complex64;

#[path = "data/airy_reference.rs"]
mod reference;

fn values(b: &AiryBundle) -> [Complex64; 6] {
    [b.ai, b.ai_prime, b.bi, b.bi_prime, b.ai_int, b.bi_int]
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

#[test]
fn matches_reference_values() {
    let names = ["Ai", "Ai'", "Bi", "Bi'", "AI", "BI"];
    let mut worst = 0.0f64;
    for &(r, theta, ref expect) in reference::AIRY_REFERENCE {
        let b = airy_bundle_polar(r, theta, Scaling::Unscaled).unwrap();
        let tol = if b.validated { 1e-12 } else { 1e-10 };
        for (k, v) in values(&b).iter().enumerate() {
            let e = Complex64::new(expect[k].0, expect[k].1);
            if e.norm() == 0.0 {
                assert!(v.norm() < 1e-15, "{} at r={r} theta={theta}", names[k]);
                continue;
            }
            let err = rel(*v, e);
            worst = worst.max(err);
            assert!(err < tol, "{} at r={r} theta={theta}: got {v}, want {e}, rel {err:e}", names[k]);
        }
    }
    eprintln!("worst relative error against reference: {worst:e}");
}

#[test]
fn scaled_values_match_reference() {
    for &(r, theta, ref expect) in reference::AIRY_REFERENCE {
        let s = airy_bundle_polar(r, theta, Scaling::ExpScaled).unwrap();
        let zeta = zeta_polar(r, theta);
        let ea = zeta.exp();
        let eb = (-zeta).exp();
        let want = [
            Complex64::new(expect[0].0, expect[0].1) * ea,
            Complex64::new(expect[2].0, expect[2].1) * eb,
        ];
        let tol = if s.validated { 1e-12 } else { 1e-10 };
        assert!(rel(s.ai, want[0]) < tol, "scaled Ai at r={r} theta={theta}");
        assert!(rel(s.bi, want[1]) < tol, "scaled Bi at r={r} theta={theta}");
    }
}

fn grid() -> Vec<(f64, f64)> {
    let mut pts = Vec::new();
    for i in 0..=30 {
        let r = 0.1 + (30.0 - 0.1) * i as f64 / 30.0;
        for j in -6..=6 {
            pts.push((r, FRAC_PI_3 * j as f64 / 6.0));
        }
    }
    pts
}

#[test]
fn wronskian_on_grid() {
    for (r, theta) in grid() {
        for scaling in [Scaling::Unscaled, Scaling::ExpScaled] {
            let b = airy_bundle_polar(r, theta, scaling).unwrap();
            let res = (b.wronskian() - 1.0 / PI).norm();
            assert!(res < 1e-12, "Wronskian residual {res:e} at r={r} theta={theta} ({scaling:?})");
        }
    }
}

#[test]
fn connection_formulas_against_direct_evaluation() {
    for i in 0..=20 {
        let r = 10.0 * i as f64 / 20.0;
        for j in -4..=4 {
            let theta = FRAC_PI_3 * j as f64 / 4.0;
            let b = airy_bundle_polar(r, theta, Scaling::Unscaled).unwrap();
            for (dir, shift) in [(Rotation::Positive, 2.0 * PI / 3.0), (Rotation::Negative, -2.0 * PI / 3.0)] {
                let t = connection_rotate(&b, dir).unwrap();
                let d = airy_bundle_polar(r, theta + shift, Scaling::Unscaled).unwrap();
                for (x, y) in [(t.ai, d.ai), (t.ai_prime, d.ai_prime), (t.ai_int, d.ai_int)] {
                    let res = (x - y).norm() / y.norm().max(1.0);
                    assert!(res < 1e-11, "rotation residual {res:e} at r={r} theta={theta}");
                }
            }
        }
    }
}

#[test]
fn bi_follows_its_asymptotic_series() {
    for i in 0..=22 {
        let x = 8.0 + i as f64;
        let b = airy_bundle_polar(x, 0.0, Scaling::ExpScaled).unwrap();
        let zeta = zeta_polar(x, 0.0);
        let lhs = b.bi * PI.sqrt() * x.powf(0.25);
        let (partial, omitted) = bi_partial_sum(zeta, 4);
        assert!((lhs - partial).norm() <= 2.0 * omitted.norm(), "x = {x}");
    }
}

#[test]
fn ai_integral_by_quadrature() {
    // Composite Simpson on [0, x] with a fine grid as an independent check.
    for i in 0..=10 {
        let x = 0.5 * i as f64;
        let n = 2000;
        let h = x / n as f64;
        let f = |t: f64| airy_bundle_polar(t, 0.0, Scaling::Unscaled).unwrap().ai.re;
        let mut s = f(0.0) + f(x);
        for k in 1..n {
            s += if k % 2 == 1 { 4.0 } else { 2.0 } * f(h * k as f64);
        }
        let integral = s * h / 3.0;
        let b = airy_bundle_polar(x, 0.0, Scaling::Unscaled).unwrap();
        assert!((b.ai_int.re + integral - 1.0 / 3.0).abs() < 1e-10, "x = {x}");
    }
}
