//! Command-line front end shared by the `np-preserve` binary and tests.
//!
//! Every numeric field of a report is an exact rational string; the only
//! floats are the convenience dump in `certificate`, which sits beside the
//! exact residual.

mod parse;
pub mod report;

pub use parse::{parse_coefficients, parse_expression, parse_polynomial, PolySource};
pub use report::Report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cone::RatioBudget;
use crate::error::Error;
use crate::halfline::{check_nonneg_halfline, polya_szego_certificate};
use crate::matrix::{falsify_search, horner_matrix_eval};
use crate::poly::Polynomial;
use crate::preserver::{
    check_circulant2, check_p1, check_p2, p3_necessary_screen, witness_from_ratio, witness_from_spectral,
    ScreenOutcome,
};
use crate::rational::{parse_rational, to_f64, Rational};

pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessKind {
    /// `1/2 [[rho + mu, rho - mu], [rho - mu, rho + mu]]`, needs `rho >= |mu|`.
    Spectral,
    /// `[[0, rho], [mu, rho - mu]]`, needs `0 < mu <= rho`.
    Ratio,
}

/// Search budgets and output settings. Flags win over environment variables,
/// which win over the defaults.
#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct RunConfig {
    /// Finest refutation grid step is 2^-N.
    #[arg(long = "budget-grid", global = true, env = "NP_PRESERVE_BUDGET_GRID", default_value_t = 10,
          value_parser = clap::value_parser!(u32).range(1..=24))]
    pub grid_exponent: u32,
    /// Maximum number of Bernstein boxes examined.
    #[arg(long = "budget-boxes", global = true, env = "NP_PRESERVE_BUDGET_BOXES", default_value_t = 1 << 14,
          value_parser = clap::value_parser!(u64).range(1..=1 << 24))]
    pub max_boxes: u64,
    #[arg(long, global = true, env = "NP_PRESERVE_TRIALS", default_value_t = 10_000,
          value_parser = clap::value_parser!(u64).range(1..=100_000_000))]
    pub trials: u64,
    #[arg(long, global = true, env = "NP_PRESERVE_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Bits of precision for half-line certificates.
    #[arg(long = "precision", global = true, env = "NP_PRESERVE_PRECISION", default_value_t = 128,
          value_parser = clap::value_parser!(u32).range(16..=4096))]
    pub precision_bits: u32,
    #[arg(long, global = true, env = "NP_PRESERVE_FORMAT", value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            grid_exponent: 10,
            max_boxes: 1 << 14,
            trials: 10_000,
            seed: 0,
            precision_bits: 128,
            format: Format::Text,
        }
    }
}

impl RunConfig {
    pub fn budget(&self) -> RatioBudget {
        RatioBudget {
            grid_exponent: self.grid_exponent,
            max_boxes: self.max_boxes as usize,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
struct InputArgs {
    /// Polynomial such as "x^5 - 2x^3 + 2x".
    #[arg(allow_hyphen_values = true, conflicts_with_all = ["coeffs", "batch"],
          required_unless_present_any = ["coeffs", "batch"])]
    expression: Option<String>,
    /// Coefficients "a0,a1,...", lowest degree first.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "batch")]
    coeffs: Option<String>,
    /// File with one polynomial expression per line.
    #[arg(long)]
    batch: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
enum Sub {
    /// Nonnegativity on [0, inf).
    CheckP1(InputArgs),
    /// Preservation of all 2x2 nonnegative matrices.
    CheckP2(InputArgs),
    /// Preservation of 2x2 nonnegative circulants.
    CheckCirculant(InputArgs),
    /// Necessary coefficient condition for preserving 3x3 nonnegative matrices.
    P3Screen(InputArgs),
    /// Randomized search for a violating nonnegative matrix.
    Falsify(InputArgs),
    /// Half-line sum-of-squares certificate.
    Certificate(InputArgs),
    /// A nonnegative witness matrix and its image under p.
    Witness {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, requires = "mu")]
        rho: Option<Rational>,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, requires = "rho")]
        mu: Option<Rational>,
        #[arg(long, value_enum, default_value_t = WitnessKind::Spectral)]
        kind: WitnessKind,
    },
}

#[derive(Debug, Parser)]
#[command(name = "np-preserve", version, about = "Exact membership tests for polynomials preserving nonnegative matrices")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    config: RunConfig,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// The operation applied to each input polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    CheckP1,
    CheckP2,
    CheckCirculant,
    P3Screen,
    Falsify,
    Certificate,
    Witness { point: Option<(Rational, Rational)>, kind: WitnessKind },
}

impl Sub {
    fn split(self) -> (Command, InputArgs) {
        match self {
            Sub::CheckP1(i) => (Command::CheckP1, i),
            Sub::CheckP2(i) => (Command::CheckP2, i),
            Sub::CheckCirculant(i) => (Command::CheckCirculant, i),
            Sub::P3Screen(i) => (Command::P3Screen, i),
            Sub::Falsify(i) => (Command::Falsify, i),
            Sub::Certificate(i) => (Command::Certificate, i),
            Sub::Witness { input, rho, mu, kind } => (
                Command::Witness {
                    point: rho.zip(mu),
                    kind,
                },
                input,
            ),
        }
    }
}

/// Run one command on one polynomial. `Err` means a usage problem (such as
/// witness parameters outside their domain), reported with exit code 64.
pub fn run_command(command: &Command, p: &Polynomial, config: &RunConfig) -> Result<Report, Error> {
    Ok(match command {
        Command::CheckP1 => report::membership(p, &check_p1(p)),
        Command::CheckP2 => report::membership(p, &check_p2(p, config.budget())),
        Command::CheckCirculant => report::membership(p, &check_circulant2(p)),
        Command::P3Screen => screen_report(p),
        Command::Falsify => falsify_report(p, config),
        Command::Certificate => certificate_report(p, config),
        Command::Witness { point: None, .. } => {
            let mut r = report::membership(p, &check_p2(p, config.budget()));
            r.push("command", "witness".into());
            r
        }
        Command::Witness {
            point: Some((rho, mu)),
            kind,
        } => {
            let a = match kind {
                WitnessKind::Spectral => witness_from_spectral(rho, mu)?,
                WitnessKind::Ratio => witness_from_ratio(rho, mu)?,
            };
            let image = horner_matrix_eval(p, &a);
            let negative = image.first_negative_entry();
            let (status, code) = if negative.is_some() { ("fail", 1) } else { ("pass", 0) };
            let mut r = Report::new(p, "P2", status, code);
            r.push("witness_kind", format!("{kind:?}").to_lowercase().into());
            r.push("witness_point", report::point(&(rho.clone(), mu.clone())));
            r.push("witness_matrix", report::matrix(&a));
            r.push("image", report::matrix(&image));
            if let Some(e) = negative {
                r.push("image_negative_entry", report::negative_entry(&e));
            }
            r
        }
    })
}

fn screen_report(p: &Polynomial) -> Report {
    let outcome = p3_necessary_screen(p);
    let mut r = Report::new(p, "P3-screen", outcome.as_str(), outcome.exit_code());
    if let ScreenOutcome::Fail { index, coefficient } = &outcome {
        r.push("offending_coefficient", json!({ "k": index, "value": report::exact(coefficient) }));
    }
    r
}

fn falsify_report(p: &Polynomial, config: &RunConfig) -> Report {
    let found = falsify_search(p, config.trials, config.seed);
    let (status, code) = if found.is_some() { ("fail", 1) } else { ("pass", 0) };
    let mut r = Report::new(p, "P2", status, code);
    let mut spent = json!({ "trials": config.trials, "seed": config.seed });
    if let Some(f) = found {
        spent["trials"] = (f.trial + 1).into();
        r.push("trial", f.trial.into());
        r.push("family", f.family.as_str().into());
        r.push("scrambled", f.scrambled.into());
        r.push("witness_matrix", report::matrix(&f.matrix));
        let image = horner_matrix_eval(p, &f.matrix);
        if let Some(e) = image.first_negative_entry() {
            r.push("image_negative_entry", report::negative_entry(&e));
        }
    }
    r.push("budget_spent", spent);
    r
}

fn certificate_report(p: &Polynomial, config: &RunConfig) -> Report {
    if p.is_zero() {
        let mut r = Report::new(p, "P1", "pass", 0);
        for name in ["f1", "f2", "g1", "g2"] {
            r.push(name, Value::Array(Vec::new()));
        }
        r.push("residual", "0".into());
        return r;
    }
    match polya_szego_certificate(p, config.precision_bits) {
        Ok(cert) => {
            let mut r = Report::new(p, "P1", "pass", 0);
            let parts = [("f1", &cert.f1), ("f2", &cert.f2), ("g1", &cert.g1), ("g2", &cert.g2)];
            for (name, q) in parts {
                r.push(name, report::polynomial(q));
            }
            let floats: serde_json::Map<String, Value> = parts
                .iter()
                .map(|(name, q)| (name.to_string(), q.coeffs().iter().map(to_f64).collect::<Vec<_>>().into()))
                .collect();
            r.push("coefficients_f64", Value::Object(floats));
            r.push("residual", report::exact(&cert.residual));
            r.push("tolerance", report::exact(&cert.tolerance));
            r.push("precision_bits", cert.precision_bits.into());
            r
        }
        Err(Error::CertificateNotFound { residual, tolerance }) => {
            let mut r = Report::new(p, "P1", "unknown", 2);
            r.push("residual", report::exact(&residual));
            r.push("tolerance", report::exact(&tolerance));
            r
        }
        Err(_) => {
            let v = check_nonneg_halfline(p);
            let mut r = Report::new(p, "P1", "fail", 1);
            if let Some(x0) = &v.witness {
                r.push("witness_point", report::point(&(x0.clone(), x0.clone())));
                r.push("witness_value", report::exact(&p.eval(x0)));
            }
            r
        }
    }
}

fn emit(out: &mut dyn Write, report: &Report, format: Format, batch: bool) -> std::io::Result<()> {
    match format {
        Format::Json if batch => writeln!(out, "{}", report.to_json()),
        Format::Json => writeln!(out, "{:#}", report.to_json()),
        Format::Text => {
            write!(out, "{}", report.to_text())?;
            if batch {
                writeln!(out)?;
            }
            Ok(())
        }
    }
}

/// Parse `args` (including the program name), run, write reports to `out`
/// and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    let config = cli.config;
    let (command, input) = cli.command.split();
    let single = match (&input.expression, &input.coeffs) {
        (Some(e), _) => Some(PolySource::Expression(e.clone())),
        (_, Some(c)) => Some(PolySource::Coefficients(c.clone())),
        _ => None,
    };
    if let Some(src) = single {
        let p = match parse_polynomial(&src) {
            Ok(p) => p,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        };
        return match run_command(&command, &p, &config) {
            Ok(report) => {
                let _ = emit(out, &report, config.format, false);
                report.exit_code
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        };
    }
    let path = input.batch.expect("clap requires one input source");
    let contents = match std::fs::read_to_string(&path) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    let mut worst = 0;
    for line in contents.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let report = parse_expression(line)
            .map_err(|e| e.to_string())
            .and_then(|p| run_command(&command, &p, &config).map_err(|e| e.to_string()))
            .unwrap_or_else(|message| Report::parse_failure(line, message));
        worst = worst_exit(worst, report.exit_code);
        let _ = emit(out, &report, config.format, true);
    }
    worst
}

/// Batch exit code: usage errors dominate, then any rejection, then any
/// unknown.
fn worst_exit(a: i32, b: i32) -> i32 {
    let rank = |c: i32| match c {
        EXIT_USAGE => 3,
        1 => 2,
        2 => 1,
        _ => 0,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}
