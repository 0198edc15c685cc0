//! Built-in verification suites. Each check is pass/fail with a short detail line.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI};

use brownian_area::airy::{airy_bundle_polar, beta_series, connection_rotate, Rotation, Scaling};
use brownian_area::exact::{q, rat_string, SymbolicConstant};
use brownian_area::expansion::{density_expansion, positive_part_ratio, scaled_expansion, tail_expansion};
use brownian_area::inversion::{density, density_scaled, g_mixture, GRoute, QuadratureConfig};
use brownian_area::kernels::{hhat_series, hx_closed, hx_definitional, AreaKind};
use brownian_area::moments::{excursion_moment, moment_constant, takacs_ratio};
use brownian_area::reference::{self, rationals};
use brownian_area::scalar::Precision;
use brownian_area::zeros::{contour_trace, ContourConfig};
use brownian_area::Result;
use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::output::{csv_line, sci, Rendered};
use crate::{Failure, Suite};

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

/// A library error counts as a failed check rather than aborting the suite.
fn guarded(name: &str, f: impl FnOnce() -> Result<Check>) -> Check {
    f().unwrap_or_else(|e| check(name, false, format!("error: {e}")))
}

/// `1 + c v` or `1 - |c| v`.
fn signed_term(c: &BigRational, v: &str) -> String {
    let sign = if c < &BigRational::from_integer(0.into()) { '-' } else { '+' };
    let abs = if sign == '-' { -c } else { c.clone() };
    format!("1 {sign} {} {v}", rat_string(&abs))
}

fn airy() -> Vec<Check> {
    let mut out = Vec::new();
    out.push(guarded("wronskian", || {
        let mut worst = 0.0f64;
        for i in 0..=30 {
            let r = 0.1 + (30.0 - 0.1) * i as f64 / 30.0;
            for j in -6..=6 {
                for scaling in [Scaling::Unscaled, Scaling::ExpScaled] {
                    let b = airy_bundle_polar(r, FRAC_PI_3 * j as f64 / 6.0, scaling)?;
                    worst = worst.max((b.wronskian() - 1.0 / PI).norm());
                }
            }
        }
        Ok(check("wronskian", worst < 1e-11, format!("max residual {worst:.2e} (limit 1e-11)")))
    }));
    out.push(guarded("connection formulas", || {
        let mut worst = 0.0f64;
        for i in 0..=20 {
            let r = 10.0 * i as f64 / 20.0;
            for j in -4..=4 {
                let theta = FRAC_PI_3 * j as f64 / 4.0;
                let b = airy_bundle_polar(r, theta, Scaling::Unscaled)?;
                for (dir, shift) in [(Rotation::Positive, 2.0 * PI / 3.0), (Rotation::Negative, -2.0 * PI / 3.0)] {
                    let t = connection_rotate(&b, dir)?;
                    let d = airy_bundle_polar(r, theta + shift, Scaling::Unscaled)?;
                    for (x, y) in [(t.ai, d.ai), (t.ai_prime, d.ai_prime), (t.ai_int, d.ai_int)] {
                        worst = worst.max((x - y).norm() / y.norm().max(1.0));
                    }
                }
            }
        }
        Ok(check("connection formulas", worst < 1e-11, format!("max residual {worst:.2e} (limit 1e-11)")))
    }));
    out.push(guarded("values at the origin", || {
        let b = airy_bundle_polar(0.0, 0.0, Scaling::Unscaled)?;
        let want = [0.355_028_053_887_817_2, -0.258_819_403_792_806_8, 0.614_926_627_446_000_7, 0.448_288_357_353_826_4];
        let got = [b.ai.re, b.ai_prime.re, b.bi.re, b.bi_prime.re];
        let worst = got.iter().zip(&want).map(|(g, w)| ((g - w) / w).abs()).fold(0.0, f64::max);
        Ok(check("values at the origin", worst < 1e-15, format!("max relative error {worst:.2e}")))
    }));
    for (kind, coeffs) in reference::BETA {
        let name = format!("beta series {kind:?}");
        out.push(guarded(&name, || {
            let s = beta_series(kind, 2)?;
            let got = &s.coeffs()[1..3];
            let ok = got == rationals(&coeffs).as_slice();
            Ok(check(&name, ok, format!("{}, {}", rat_string(&got[0]), rat_string(&got[1]))))
        }));
    }
    out
}

fn kernels() -> Vec<Check> {
    let mut out = Vec::new();
    out.push(guarded("definitional and closed forms", || {
        let mut worst = 0.0f64;
        for kind in AreaKind::ALL {
            for r in [0.5, 1.0, 2.0, 4.0, 8.0] {
                for j in -2..=2 {
                    let z = Complex64::from_polar(r, PI / 12.0 * j as f64);
                    let d = hx_definitional(kind, z, Precision::Extended)?;
                    let c = hx_closed(kind, z)?;
                    worst = worst.max((d - c).norm() / c.norm());
                }
            }
        }
        Ok(check("definitional and closed forms", worst < 1e-9, format!("max relative difference {worst:.2e} (limit 1e-9)")))
    }));
    for (kind, c) in reference::HHAT_FIRST {
        let name = format!("correction series {kind}");
        out.push(guarded(&name, || {
            let s = hhat_series(kind, 1)?;
            let ok = s.coeff(0) == &q(1, 1) && s.coeff(1) == &q(c.0, c.1);
            Ok(check(&name, ok, signed_term(s.coeff(1), "t")))
        }));
    }
    out
}

fn expansion() -> Vec<Check> {
    let mut out = Vec::new();
    for t in reference::EXPANSIONS {
        let name = format!("coefficients {}", t.kind);
        out.push(guarded(&name, || {
            let d = density_expansion(t.kind, 3)?;
            let tail = tail_expansion(&d)?;
            let ok = d.corrections == rationals(&t.density)
                && tail.corrections == rationals(&t.tail)
                && d.prefactor.to_string() == t.density_prefactor
                && tail.prefactor.to_string() == t.tail_prefactor;
            let list = |v: &[BigRational]| v.iter().map(rat_string).collect::<Vec<_>>().join(" ");
            Ok(check(&name, ok, format!("density [{}], tail [{}]", list(&d.corrections), list(&tail.corrections))))
        }));
    }
    out.push(guarded("positive-part ratio", || {
        let r = positive_part_ratio(AreaKind::Bridge, AreaKind::BridgePositive, 2)?;
        let ok = r[0] == q(1, 1) && r[1] == q(1, 36);
        Ok(check("positive-part ratio", ok, signed_term(&r[1], "x^-2")))
    }));
    out
}

fn inversion() -> Vec<Check> {
    let mut out = Vec::new();
    let quad = QuadratureConfig::default().force_quadrature();
    for (x, want) in reference::EXCURSION_DENSITY {
        let name = format!("excursion density at {x}");
        out.push(guarded(&name, || {
            let d = density(AreaKind::Excursion, x, &quad)?;
            let rel = (d.value - want).abs() / want;
            Ok(check(&name, rel < 1e-8, format!("relative error {rel:.2e} (limit 1e-8)")))
        }));
    }
    for (x, bound) in [(2.0, 1e-2), (2.5, 1e-3), (3.0, 3e-4)] {
        let name = format!("handoff at {x}");
        out.push(guarded(&name, || {
            let e = scaled_expansion(AreaKind::Excursion, 3)?.eval(x);
            let d = density_scaled(AreaKind::Excursion, x, &quad)?;
            let rel = (d.value - e).abs() / e;
            Ok(check(&name, rel <= bound, format!("quadrature vs expansion {rel:.2e} (limit {bound:.0e})")))
        }));
    }
    out.push(guarded("mixture routes", || {
        let cfg = QuadratureConfig::default();
        let real = g_mixture(AreaKind::Bridge, 1.5, GRoute::Real, &cfg)?;
        let rot = g_mixture(AreaKind::Bridge, 1.5, GRoute::Rotated(PI / 12.0), &cfg)?;
        let rel = (real - rot).abs() / real;
        Ok(check("mixture routes", rel < 1e-8, format!("real axis vs rotated ray {rel:.2e}")))
    }));
    out
}

fn moments() -> Vec<Check> {
    let mut out = Vec::new();
    out.push(guarded("exact excursion moments", || {
        let m1 = excursion_moment(1)?.to_f64();
        let m2 = excursion_moment(2)?;
        let ok = (m1 - (PI / 8.0).sqrt()).abs() < 1e-15 && m2 == SymbolicConstant::rational(q(5, 12));
        Ok(check("exact excursion moments", ok, format!("E B = {}, E B^2 = {m2}", sci(m1))))
    }));
    for n in [50usize, 100] {
        let name = format!("recursion ratio n = {n}");
        out.push(guarded(&name, || {
            let r = takacs_ratio(n)?;
            let nf = n as f64;
            let dev = (r - (1.0 - 5.0 / (18.0 * nf))).abs();
            Ok(check(&name, dev < 3.0 / (nf * nf), format!("ratio {r:.8}, deviation {dev:.2e} (limit {:.2e})", 3.0 / (nf * nf))))
        }));
    }
    for (kind, c, a, b, k) in reference::MOMENT_CONSTANTS {
        let name = format!("moment constant {kind}");
        out.push(guarded(&name, || {
            let got = moment_constant(kind)?;
            let ok = got == SymbolicConstant::from_parts(q(c.0, c.1), a, b, k);
            Ok(check(&name, ok, got.to_string()))
        }));
    }
    out
}

fn zeros() -> Vec<Check> {
    let mut out = Vec::new();
    for k in [3usize, 5, 10] {
        let name = format!("winding number k = {k}");
        out.push(guarded(&name, || {
            let t = contour_trace(k, &ContourConfig::default())?;
            let mut c = check(&name, t.winding_number == 0, format!("winding {}, min |g| {:.3e}", t.winding_number, t.min_modulus));
            if k == 10 {
                let lower_ok = (t.lower_change + FRAC_PI_4).abs() < 0.1;
                let sym_ok = (t.upper_change - t.lower_change).abs() < 1e-8;
                c.passed &= lower_ok && sym_ok;
                c.detail += &format!(", lower leg {:.4} (target -pi/4), upper leg {:.4}", t.lower_change, t.upper_change);
            }
            Ok(c)
        }));
    }
    out
}

const SUITES: [(Suite, &str, fn() -> Vec<Check>); 6] = [
    (Suite::Airy, "airy", airy),
    (Suite::Kernels, "kernels", kernels),
    (Suite::Expansion, "expansion", expansion),
    (Suite::Inversion, "inversion", inversion),
    (Suite::Moments, "moments", moments),
    (Suite::Zeros, "zeros", zeros),
];

pub fn run(which: Suite) -> std::result::Result<Rendered, Failure> {
    let mut suites = Vec::new();
    let mut csv = csv_line(&["suite".into(), "check".into(), "passed".into(), "detail".into()]);
    let mut text = String::new();
    let mut failed = false;
    for (suite, name, f) in SUITES {
        if which != Suite::All && which != suite {
            continue;
        }
        let checks = f();
        let passed = checks.iter().filter(|c| c.passed).count();
        failed |= passed < checks.len();
        text.push_str(&format!("{name}: {passed}/{} passed\n", checks.len()));
        for c in &checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            text.push_str(&format!("  {mark} {}: {}\n", c.name, c.detail));
            csv.push_str(&csv_line(&[name.into(), c.name.clone(), c.passed.to_string(), c.detail.clone()]));
        }
        let items: Vec<Value> = checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect();
        suites.push(json!({ "suite": name, "passed": passed, "total": checks.len(), "checks": items }));
    }
    let json = json!({ "passed": !failed, "suites": suites });
    Ok(Rendered { json, csv, text, failed })
}

/// The argument trace of the zero certificate, one row per contour sample.
pub fn zeros_trace(k: usize) -> std::result::Result<Rendered, Failure> {
    let t = contour_trace(k, &ContourConfig::default())?;
    let mut csv = csv_line(&["leg", "re", "im", "side", "modulus", "arg"].map(String::from));
    for p in &t.points {
        let leg = serde_json::to_value(p.leg).expect("enum serializes");
        csv.push_str(&csv_line(&[
            leg.as_str().unwrap_or_default().to_string(),
            sci(p.re),
            sci(p.im),
            p.side.unwrap_or("").to_string(),
            sci(p.modulus),
            sci(p.arg),
        ]));
    }
    let json = serde_json::to_value(&t).expect("trace serializes");
    let text = format!("k = {k}: winding number {}\n", t.winding_number);
    Ok(Rendered { json, csv, text, failed: t.winding_number != 0 })
}
