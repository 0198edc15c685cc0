//! `barea`: densities, tails, expansion coefficients, moments and checks for
//! Brownian areas.

mod commands;
mod output;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use brownian_area::inversion::{Execution, Mode, QuadratureConfig};
use brownian_area::kernels::AreaKind;
use brownian_area::moments::DensityGrid;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use crate::output::{Format, Rendered};

#[derive(Debug, Parser)]
#[command(name = "barea", version, about = "Densities, tails, asymptotic expansions and moments of Brownian areas")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every subcommand. Defaults can be overridden through
/// `BAREA_*` environment variables.
#[derive(Debug, Args)]
struct Common {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "BAREA_FORMAT")]
    format: Format,
    /// Relative accuracy target of the numerical inversion.
    #[arg(long, global = true, env = "BAREA_TOL")]
    tol: Option<f64>,
    /// Refinement passes before giving up on the accuracy target.
    #[arg(long, global = true, env = "BAREA_MAX_REFINEMENTS")]
    max_refinements: Option<usize>,
    /// Gauss-Legendre points per panel in the inversion.
    #[arg(long, global = true, env = "BAREA_POINTS")]
    points: Option<usize>,
    /// Write the report to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Disable the thread pool.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum MethodArg {
    #[default]
    Auto,
    Quadrature,
    Expansion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Suite {
    Airy,
    Kernels,
    Inversion,
    Expansion,
    Moments,
    Zeros,
    #[default]
    All,
}

fn parse_area(s: &str) -> Result<AreaKind, String> {
    s.parse().map_err(|e: brownian_area::Error| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Density of the area at one or more points.
    Density {
        #[arg(value_parser = parse_area)]
        area: AreaKind,
        #[arg(long, required = true, num_args = 1.., allow_negative_numbers = true)]
        x: Vec<f64>,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
        /// Use the variable `sqrt(2) B` instead of `B`.
        #[arg(long)]
        scaled: bool,
    },
    /// Tail probability `P(B > x)`.
    Tail {
        #[arg(value_parser = parse_area)]
        area: AreaKind,
        #[arg(long, required = true, num_args = 1.., allow_negative_numbers = true)]
        x: Vec<f64>,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
        #[arg(long)]
        scaled: bool,
    },
    /// Exact coefficients of the right-tail expansion.
    Coeffs {
        #[arg(value_parser = parse_area)]
        area: AreaKind,
        /// Number of correction terms after the leading 1.
        #[arg(long, default_value_t = 3)]
        order: usize,
        /// Expand the tail probability instead of the density.
        #[arg(long)]
        tail: bool,
        #[arg(long)]
        scaled: bool,
    },
    /// Moments: exact (excursion), asymptotic and numeric.
    Moments {
        #[arg(value_parser = parse_area)]
        area: AreaKind,
        #[arg(long, required = true, num_args = 1..)]
        n: Vec<usize>,
        /// Include the first-order corrected asymptotics (excursion only).
        #[arg(long)]
        refined: bool,
        /// Integrate the inverted density as well (n <= 6).
        #[arg(long)]
        numeric: bool,
    },
    /// Grid of density, tail and expansion values.
    Table {
        #[arg(value_parser = parse_area)]
        area: AreaKind,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        step: f64,
        #[arg(long)]
        scaled: bool,
        /// Skip the tail columns, which cost one integral of the density per row.
        #[arg(long)]
        no_tail: bool,
    },
    /// Run the built-in verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t)]
        suite: Suite,
        /// Airy zero index of the contour whose trace `--suite zeros --format csv` prints.
        #[arg(long, default_value_t = 10)]
        trace_k: usize,
    },
}

/// A failure with its exit code.
pub struct Failure {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            kind: "usage",
            message: message.into(),
        }
    }
}

impl From<brownian_area::Error> for Failure {
    fn from(e: brownian_area::Error) -> Self {
        use brownian_area::Error as E;
        let kind = match e {
            E::ToleranceNotMet { .. } => "tolerance-not-met",
            E::Domain(_) => "domain",
            E::Unsupported(_) => "unsupported",
            _ => "numerical",
        };
        Failure {
            code: 1,
            kind,
            message: e.to_string(),
        }
    }
}

fn quadrature_config(common: &Common, method: MethodArg) -> Result<QuadratureConfig, Failure> {
    with_overrides(QuadratureConfig::default(), common, method)
}

fn with_overrides(mut cfg: QuadratureConfig, common: &Common, method: MethodArg) -> Result<QuadratureConfig, Failure> {
    if let Some(t) = common.tol {
        cfg.target_rel_tol = t;
    }
    if let Some(m) = common.max_refinements {
        cfg.max_refinements = m;
    }
    if let Some(p) = common.points {
        cfg.r_points_per_panel = p;
    }
    if common.sequential {
        cfg.execution = Execution::Sequential;
    }
    cfg.mode = match method {
        MethodArg::Auto => Mode::Auto,
        MethodArg::Quadrature => Mode::ForceQuadrature,
        MethodArg::Expansion => Mode::ForceExpansion,
    };
    cfg.validate().map_err(|e| Failure::usage(e.to_string()))?;
    Ok(cfg)
}

fn check_points(xs: &[f64]) -> Result<(), Failure> {
    match xs.iter().find(|x| !(x.is_finite() && **x > 0.0)) {
        Some(x) => Err(Failure::usage(format!("x must be positive and finite, got {x}"))),
        None => Ok(()),
    }
}

fn run(cli: &Cli) -> Result<Rendered, Failure> {
    let c = &cli.common;
    match &cli.command {
        Command::Density { area, x, method, scaled } => {
            check_points(x)?;
            let cfg = quadrature_config(c, *method)?;
            commands::density_report(*area, x, *scaled, &cfg)
        }
        Command::Tail { area, x, method, scaled } => {
            check_points(x)?;
            let cfg = quadrature_config(c, *method)?;
            commands::tail_report(*area, x, *scaled, &cfg)
        }
        Command::Coeffs { area, order, tail, scaled } => {
            if *order > brownian_area::expansion::MAX_TERMS {
                return Err(Failure::usage(format!("--order must be at most {}", brownian_area::expansion::MAX_TERMS)));
            }
            commands::coeffs(*area, *order, *tail, *scaled)
        }
        Command::Moments { area, n, refined, numeric } => {
            if n.contains(&0) {
                return Err(Failure::usage("moments are indexed from n = 1"));
            }
            if *refined && *area != AreaKind::Excursion {
                return Err(Failure::usage("--refined is only available for the excursion"));
            }
            if *numeric && n.iter().any(|&m| m > 6) {
                return Err(Failure::usage("--numeric supports n <= 6"));
            }
            let cfg = with_overrides(DensityGrid::default_config(), c, MethodArg::Auto)?;
            commands::moments(*area, n, *refined, numeric.then_some(&cfg))
        }
        Command::Table { area, from, to, step, scaled, no_tail } => {
            if !(from.is_finite() && to.is_finite() && *from > 0.0 && to >= from) {
                return Err(Failure::usage("need 0 < --from <= --to"));
            }
            if !(step.is_finite() && *step > 0.0) {
                return Err(Failure::usage("--step must be positive"));
            }
            let rows = ((to - from) / step + 1e-9).floor() as usize + 1;
            if rows > 10_000 {
                return Err(Failure::usage(format!("{rows} rows requested; at most 10000")));
            }
            let xs: Vec<f64> = (0..rows).map(|i| from + step * i as f64).collect();
            let cfg = quadrature_config(c, MethodArg::Auto)?;
            commands::table(*area, &xs, *scaled, !*no_tail, &cfg)
        }
        Command::Verify { suite, trace_k } => {
            if *trace_k < 3 {
                return Err(Failure::usage("--trace-k must be at least 3"));
            }
            if c.format == Format::Csv && *suite == Suite::Zeros {
                return verify::zeros_trace(*trace_k);
            }
            verify::run(*suite)
        }
    }
}

/// Whether the raw arguments or the environment ask for JSON; used to format
/// errors raised before parsing completes.
fn wants_json(args: &[String]) -> bool {
    let flag = args.windows(2).any(|w| w[0] == "--format" && w[1] == "json") || args.iter().any(|a| a == "--format=json");
    flag || std::env::var("BAREA_FORMAT").is_ok_and(|v| v == "json")
}

fn report_error(json: bool, f: &Failure) {
    if json {
        let v = serde_json::json!({ "error": f.kind, "message": f.message, "exit_code": f.code });
        eprintln!("{v}");
    } else {
        eprintln!("error: {}", f.message);
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            if wants_json(&args) {
                report_error(true, &Failure::usage(e.kind().as_str().unwrap_or("invalid arguments").to_string() + ": " + &e.to_string()));
            } else {
                let _ = e.print();
            }
            return ExitCode::from(2);
        }
    };
    let json = cli.common.format == Format::Json;
    match run(&cli) {
        Ok(rendered) => {
            let text = rendered.render(cli.common.format);
            let written = match &cli.common.output {
                Some(path) => std::fs::write(path, text.as_bytes()),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                report_error(json, &Failure { code: 1, kind: "io", message: e.to_string() });
                return ExitCode::from(1);
            }
            if rendered.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            if f.code == 2 && !json {
                let _ = Cli::command().error(clap::error::ErrorKind::ValueValidation, &f.message).print();
            } else {
                report_error(json, &f);
            }
            ExitCode::from(f.code)
        }
    }
}
