use brownian_area::exact::rat_string;
use brownian_area::expansion::{density_expansion, scaled_expansion, tail_expansion};
use brownian_area::inversion::{density, density_scaled, tail_probability, tail_probability_scaled, DensityResult, Mode, QuadratureConfig};
use brownian_area::kernels::AreaKind;
use brownian_area::moments::{moment_record, DensityGrid};
use brownian_area::Result;
use serde_json::{json, Value};

use crate::output::{csv_line, estimate, sci, sci_err, Rendered};
use crate::Failure;

#[derive(Clone, Copy)]
enum Quantity {
    Density,
    Tail,
}

impl Quantity {
    fn name(self) -> &'static str {
        match self {
            Quantity::Density => "density",
            Quantity::Tail => "tail",
        }
    }
}

fn evaluate(q: Quantity, kind: AreaKind, x: f64, scaled: bool, cfg: &QuadratureConfig) -> Result<DensityResult> {
    match (q, scaled) {
        (Quantity::Density, false) => density(kind, x, cfg),
        (Quantity::Density, true) => density_scaled(kind, x, cfg),
        (Quantity::Tail, false) => tail_probability(kind, x, cfg),
        (Quantity::Tail, true) => tail_probability_scaled(kind, x, cfg),
    }
}

fn method_name(r: &DensityResult) -> Value {
    serde_json::to_value(r.method).expect("enum serializes")
}

/// Shortest round-trip form of an input, echoed as a string.
fn echo(x: f64) -> String {
    format!("{x}")
}

fn pointwise(q: Quantity, kind: AreaKind, xs: &[f64], scaled: bool, cfg: &QuadratureConfig) -> std::result::Result<Rendered, Failure> {
    let results = xs.iter().map(|&x| evaluate(q, kind, x, scaled, cfg)).collect::<Result<Vec<_>>>()?;
    let rows: Vec<Value> = xs
        .iter()
        .zip(&results)
        .map(|(&x, r)| {
            json!({
                "x": echo(x),
                "value": r.value,
                "est_error": r.est_error,
                "method": method_name(r),
            })
        })
        .collect();
    let json = json!({
        "kind": kind.name(),
        "quantity": q.name(),
        "scaled": scaled,
        "results": rows,
    });
    let mut csv = csv_line(&["x".into(), "value".into(), "est_error".into(), "method".into()]);
    let mut text = String::new();
    let label = if scaled { format!("{} of sqrt(2) B, {kind}", q.name()) } else { format!("{} of the {kind} area", q.name()) };
    text.push_str(&format!("{label}\n"));
    for (&x, r) in xs.iter().zip(&results) {
        let m = method_name(r).as_str().unwrap_or_default().to_string();
        csv.push_str(&csv_line(&[echo(x), sci(r.value), sci_err(r.est_error), m.clone()]));
        text.push_str(&format!("  x = {:<10} {}  +- {}  ({m})\n", echo(x), sci(r.value), sci_err(r.est_error)));
    }
    Ok(Rendered { json, csv, text, failed: false })
}

pub fn density_report(kind: AreaKind, xs: &[f64], scaled: bool, cfg: &QuadratureConfig) -> std::result::Result<Rendered, Failure> {
    pointwise(Quantity::Density, kind, xs, scaled, cfg)
}

pub fn tail_report(kind: AreaKind, xs: &[f64], scaled: bool, cfg: &QuadratureConfig) -> std::result::Result<Rendered, Failure> {
    pointwise(Quantity::Tail, kind, xs, scaled, cfg)
}

pub fn coeffs(kind: AreaKind, order: usize, tail: bool, scaled: bool) -> std::result::Result<Rendered, Failure> {
    let d = if scaled { scaled_expansion(kind, order)? } else { density_expansion(kind, order)? };
    let e = if tail { tail_expansion(&d)? } else { d };
    let corrections: Vec<String> = e.corrections.iter().map(rat_string).collect();
    let json = json!({
        "kind": kind.name(),
        "quantity": serde_json::to_value(e.quantity).expect("enum serializes"),
        "alpha": rat_string(&e.alpha),
        "rate": rat_string(&e.b),
        "prefactor": e.leading_term(),
        "corrections": corrections,
        "exact": true,
    });
    let mut csv = csv_line(&["power".into(), "coefficient".into()]);
    for (k, c) in corrections.iter().enumerate() {
        csv.push_str(&csv_line(&[format!("x^-{}", 2 * k), c.clone()]));
    }
    let text = format!("{e}\n");
    Ok(Rendered { json, csv, text, failed: false })
}

pub fn moments(kind: AreaKind, ns: &[usize], refined: bool, grid_cfg: Option<&QuadratureConfig>) -> std::result::Result<Rendered, Failure> {
    let grid = grid_cfg.map(|cfg| DensityGrid::new(kind, cfg)).transpose()?;
    let mut records = ns.iter().map(|&n| moment_record(kind, n, grid.as_ref())).collect::<Result<Vec<_>>>()?;
    if !refined {
        for r in &mut records {
            r.refined = None;
        }
    }
    let mut json = json!({
        "kind": kind.name(),
        "moments": serde_json::to_value(&records).expect("records serialize"),
    });
    if let Some(g) = &grid {
        let m = g.mass();
        json["grid_mass"] = estimate(m.value, m.est_error);
    }
    let mut csv = csv_line(&[
        "n".into(),
        "exact".into(),
        "exact_value".into(),
        "asymptotic".into(),
        "asymptotic_err".into(),
        "refined".into(),
        "refined_err".into(),
        "numeric".into(),
        "numeric_err".into(),
    ]);
    let mut text = format!("moments of the {kind} area\n");
    let opt = |e: Option<brownian_area::moments::Estimate>| match e {
        Some(e) => (sci(e.value), sci_err(e.est_error)),
        None => (String::new(), String::new()),
    };
    for r in &records {
        let (ex, exv) = match &r.exact {
            Some(e) => (e.symbolic.clone(), sci(e.value)),
            None => (String::new(), String::new()),
        };
        let (rv, re) = opt(r.refined);
        let (nv, ne) = opt(r.numeric);
        csv.push_str(&csv_line(&[
            r.n.to_string(),
            ex.clone(),
            exv.clone(),
            sci(r.asymptotic.value),
            sci_err(r.asymptotic.est_error),
            rv.clone(),
            re.clone(),
            nv.clone(),
            ne.clone(),
        ]));
        text.push_str(&format!("  n = {}\n", r.n));
        if !ex.is_empty() {
            text.push_str(&format!("    exact       {ex} = {exv}\n"));
        }
        text.push_str(&format!("    asymptotic  {}  +- {}\n", sci(r.asymptotic.value), sci_err(r.asymptotic.est_error)));
        if !rv.is_empty() {
            text.push_str(&format!("    refined     {rv}  +- {re}\n"));
        }
        if !nv.is_empty() {
            text.push_str(&format!("    numeric     {nv}  +- {ne}\n"));
        }
    }
    Ok(Rendered { json, csv, text, failed: false })
}

pub fn table(kind: AreaKind, xs: &[f64], scaled: bool, with_tail: bool, cfg: &QuadratureConfig) -> std::result::Result<Rendered, Failure> {
    let expansion_cfg = QuadratureConfig {
        mode: Mode::ForceExpansion,
        ..cfg.clone()
    };
    let mut rows = Vec::with_capacity(xs.len());
    let mut csv_header = vec!["x", "density", "density_err", "density_method"];
    if with_tail {
        csv_header.extend(["tail", "tail_err"]);
    }
    csv_header.extend(["density_expansion", "density_expansion_err", "tail_expansion", "tail_expansion_err"]);
    let mut csv = csv_line(&csv_header.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    let mut text = format!("{:<10} {:>22} {:>9} {:>22} {:>9}\n", "x", "density", "error", "expansion", "error");
    for &x in xs {
        let d = evaluate(Quantity::Density, kind, x, scaled, cfg)?;
        let t = if with_tail { Some(evaluate(Quantity::Tail, kind, x, scaled, cfg)?) } else { None };
        let de = evaluate(Quantity::Density, kind, x, scaled, &expansion_cfg)?;
        let te = evaluate(Quantity::Tail, kind, x, scaled, &expansion_cfg)?;
        let mut row = json!({
            "x": echo(x),
            "density": { "value": d.value, "est_error": d.est_error, "method": method_name(&d) },
            "density_expansion": estimate(de.value, de.est_error),
            "tail_expansion": estimate(te.value, te.est_error),
        });
        let mut fields = vec![echo(x), sci(d.value), sci_err(d.est_error), method_name(&d).as_str().unwrap_or_default().to_string()];
        if let Some(t) = &t {
            row["tail"] = estimate(t.value, t.est_error);
            fields.extend([sci(t.value), sci_err(t.est_error)]);
        }
        fields.extend([sci(de.value), sci_err(de.est_error), sci(te.value), sci_err(te.est_error)]);
        csv.push_str(&csv_line(&fields));
        text.push_str(&format!("{:<10} {:>22} {:>9} {:>22} {:>9}\n", echo(x), sci(d.value), sci_err(d.est_error), sci(de.value), sci_err(de.est_error)));
        rows.push(row);
    }
    let json = json!({ "kind": kind.name(), "scaled": scaled, "rows": rows });
    Ok(Rendered { json, csv, text, failed: false })
}
