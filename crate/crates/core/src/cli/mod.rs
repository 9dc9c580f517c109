//! Command-line front end.
//!
//! Exit codes: 0 when every audited inequality holds, 2 when any fails, 1 on
//! usage or input errors (including failed hypothesis gates).

mod plot;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::convexgeom::{self, ConvexReport, SupportFunction};
use crate::curvegeom::{self, CurveAudit, IdentityReport, PlaneCurve};
use crate::exactcoeff::CoefficientTable;
use crate::spectral::{random_series, TrigSeries};
use crate::wirtinger::{self, Form, WirtingerAudit};

pub use plot::{convex_plot_data, curve_plot_data};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_FAIL: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "wirtinger-lab", version, about = "Audit higher-order Wirtinger and isoperimetric inequalities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    A,
    B,
    C,
    All,
}

impl FormArg {
    fn forms(self) -> Vec<Form> {
        match self {
            FormArg::A => vec![Form::A],
            FormArg::B => vec![Form::B],
            FormArg::C => vec![Form::C],
            FormArg::All => Form::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the exact coefficient table of order m.
    Coeffs {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
    },
    /// Evaluate the order-m functionals of a zero-mean series.
    VerifyWirtinger {
        #[arg(long)]
        m: usize,
        /// TrigSeries JSON file.
        #[arg(long, required_unless_present = "random", conflicts_with = "random")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "all")]
        form: FormArg,
        #[arg(long)]
        sandwich: bool,
        /// Audit COUNT seeded random zero-mean series instead of a file.
        #[arg(long, value_name = "COUNT", requires = "degree")]
        random: Option<usize>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Audit the isoperimetric and Sachs chains of a closed curve.
    CurveReport {
        /// Curve JSON file `{"x": series, "y": series}`.
        #[arg(long)]
        input: PathBuf,
        /// Polygon resolution of the simplicity check.
        #[arg(long, default_value_t = curvegeom::SIMPLICITY_NODES)]
        grid: usize,
        /// Write N boundary samples as CSV instead of the JSON report.
        #[arg(long, value_name = "N")]
        emit_points: Option<usize>,
        /// Repeat the first sample at the end of the CSV.
        #[arg(long, requires = "emit_points")]
        close: bool,
    },
    /// Audit a convex body given by its support function.
    ConvexReport {
        /// Support function TrigSeries JSON file.
        #[arg(long)]
        support: PathBuf,
        #[arg(long)]
        m: usize,
        /// Audit every order 1..=m instead of m alone.
        #[arg(long)]
        all: bool,
        #[arg(long, value_name = "N")]
        emit_points: Option<usize>,
        #[arg(long, requires = "emit_points")]
        close: bool,
    },
    /// Audit a seeded corpus of random convex bodies, one CSV row each.
    Sweep {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0.3)]
        margin: f64,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lab(#[from] crate::Error),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("malformed JSON in {path} at `{field}`: {message}")]
    Json { path: String, field: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("write failed: {0}")]
    Write(#[from] std::io::Error),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveInput {
    x: TrigSeries,
    y: TrigSeries,
}

/// Parses `path` as JSON, naming the offending field on failure.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let display = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: display.clone(), source })?;
    let mut de = serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let field = e.path().to_string();
        CliError::Json { path: display, field, message: e.into_inner().to_string() }
    })
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

/// Shortest round-trip decimal, in exponent form outside `[1e-4, 1e15)`.
pub fn fmt_num(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && a.is_finite() && !(1e-4..1e15).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

fn status(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Coeffs { m, format } => coeffs(m, format, out),
        Command::VerifyWirtinger { m, input, form, sandwich, random, degree, seed } => {
            let forms = form.forms();
            match (input, random) {
                (Some(path), _) => {
                    let f: TrigSeries = read_json(&path)?;
                    let audit = wirtinger::audit(&f, m, &forms, sandwich)?;
                    write_json(out, &audit)?;
                    Ok(status(audit.passed()))
                }
                (None, Some(count)) => {
                    let degree = degree.ok_or_else(|| CliError::Usage("--random needs --degree".into()))?;
                    verify_random(m, &forms, sandwich, count, degree, seed, out)
                }
                (None, None) => Err(CliError::Usage("one of --input or --random is required".into())),
            }
        }
        Command::CurveReport { input, grid, emit_points, close } => {
            let raw: CurveInput = read_json(&input)?;
            let curve = PlaneCurve::new(raw.x, raw.y)?;
            curve_report(&curve, grid, emit_points, close, out)
        }
        Command::ConvexReport { support, m, all, emit_points, close } => {
            let h: TrigSeries = read_json(&support)?;
            let h = SupportFunction::new(h)?;
            let orders: Vec<usize> = if all { (1..=m).collect() } else { vec![m] };
            let report = convexgeom::convex_report(&h, &orders)?;
            if let Some(n) = emit_points {
                convex_plot_data(&h, n, close, out)?;
            } else {
                write_json(out, &LabeledConvexReport { passed: report.passed(), report: &report })?;
            }
            Ok(status(report.passed()))
        }
        Command::Sweep { degree, count, seed, m, margin } => sweep(degree, count, seed, m, margin, out),
    }
}

fn coeffs(m: usize, format: TableFormat, out: &mut dyn Write) -> Result<i32, CliError> {
    let table = CoefficientTable::new(m)?;
    match format {
        TableFormat::Json => write_json(out, &table.to_record())?,
        TableFormat::Csv => {
            let record = table.to_record();
            writeln!(out, "family,k,value")?;
            for (family, values) in [("c", &record.c), ("lambda", &record.lambda), ("S", &record.s)] {
                for (k, v) in values.iter().enumerate() {
                    writeln!(out, "{family},{k},{v}")?;
                }
            }
        }
    }
    Ok(status(table.check_invariants()))
}

#[derive(Serialize)]
struct RandomAudit {
    index: usize,
    series: TrigSeries,
    audit: WirtingerAudit,
}

fn verify_random(
    m: usize,
    forms: &[Form],
    sandwich: bool,
    count: usize,
    degree: usize,
    seed: u64,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let corpus: Vec<TrigSeries> = (0..count).map(|_| random_series(degree, true, &mut rng)).collect();
    let rows = corpus
        .into_iter()
        .enumerate()
        .map(|(index, series)| {
            let audit = wirtinger::audit(&series, m, forms, sandwich)?;
            Ok(RandomAudit { index, series, audit })
        })
        .collect::<crate::Result<Vec<_>>>()?;
    let pass = rows.iter().all(|r| r.audit.passed());
    write_json(out, &rows)?;
    Ok(status(pass))
}

#[derive(Serialize)]
struct LabeledCurveReport<'a> {
    passed: bool,
    audit: &'a CurveAudit,
    identities: &'a IdentityReport,
}

#[derive(Serialize)]
struct LabeledConvexReport<'a> {
    passed: bool,
    #[serde(flatten)]
    report: &'a ConvexReport,
}

fn curve_report(curve: &PlaneCurve, grid: usize, emit: Option<usize>, close: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let audit = curvegeom::audit_with_grid(curve, grid)?;
    let identities = curvegeom::identity_checks(curve)?;
    let passed = audit.passed() && identities.passed();
    if let Some(n) = emit {
        curve_plot_data(curve, n, close, out)?;
    } else {
        write_json(out, &LabeledCurveReport { passed, audit: &audit, identities: &identities })?;
    }
    Ok(status(passed))
}

/// One row of `sweep` output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub index: usize,
    pub seed: u64,
    pub deficit: f64,
    pub order_slack: f64,
    pub lin_tsai_slack: f64,
    pub g2: f64,
    pub g3: f64,
    pub reverse_slacks: Vec<f64>,
    pub passed: bool,
}

const SWEEP_HEADER: &str =
    "index,seed,deficit,order_slack,lin_tsai_slack,g2,g3,reverse_a,reverse_b,reverse_c,bernstein_mettler_1,bernstein_mettler_2,gage,passed";

/// Audits `count` random convex bodies in parallel; rows come back in index
/// order regardless of scheduling.
pub fn sweep_rows(degree: usize, count: usize, seed: u64, m: usize, margin: f64) -> crate::Result<Vec<SweepRow>> {
    (0..count)
        .into_par_iter()
        .map(|index| {
            let instance_seed = seed.wrapping_add(index as u64);
            let h = convexgeom::random_convex(degree, instance_seed, margin)?;
            let order = convexgeom::thm32_audit(&h, m)?;
            let lt = convexgeom::lin_tsai_audit(&h);
            let rev = convexgeom::reverse_isoperimetric_audit(&h);
            Ok(SweepRow {
                index,
                seed: instance_seed,
                deficit: order.deficit,
                order_slack: order.slack(),
                lin_tsai_slack: lt.lin_tsai_slack,
                g2: lt.g2,
                g3: lt.g3,
                reverse_slacks: rev.reports.iter().map(|r| r.slack).collect(),
                passed: order.passed() && lt.passed() && rev.passed(),
            })
        })
        .collect()
}

fn sweep(degree: usize, count: usize, seed: u64, m: usize, margin: f64, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows = sweep_rows(degree, count, seed, m, margin)?;
    writeln!(out, "{SWEEP_HEADER}")?;
    for r in &rows {
        write!(out, "{},{}", r.index, r.seed)?;
        for v in [r.deficit, r.order_slack, r.lin_tsai_slack, r.g2, r.g3].iter().chain(&r.reverse_slacks) {
            write!(out, ",{}", fmt_num(*v))?;
        }
        writeln!(out, ",{}", r.passed)?;
    }
    Ok(status(rows.iter().all(|r| r.passed)))
}
