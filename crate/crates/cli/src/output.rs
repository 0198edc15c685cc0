use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A report in all three output formats.
pub struct Rendered {
    pub json: Value,
    pub csv: String,
    pub text: String,
    /// A check in the report failed; the process exits with status 1.
    pub failed: bool,
}

impl Rendered {
    pub fn render(&self, format: Format) -> String {
        let mut s = match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("values are finite or null"),
            Format::Csv => self.csv.clone(),
            Format::Text => self.text.clone(),
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    }
}

/// `{"value": v, "est_error": e}`.
pub fn estimate(value: f64, est_error: f64) -> Value {
    json!({ "value": value, "est_error": est_error })
}

/// Scientific notation with enough digits to round-trip.
pub fn sci(v: f64) -> String {
    // No negative zero in reports.
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.15e}")
}

/// Scientific notation for error estimates.
pub fn sci_err(v: f64) -> String {
    format!("{v:.2e}")
}

pub fn csv_line(fields: &[String]) -> String {
    let mut s = fields
        .iter()
        .map(|f| {
            if f.contains([',', '"', '\n']) {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(",");
    s.push('\n');
    s
}
