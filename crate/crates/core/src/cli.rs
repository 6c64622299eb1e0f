//! Command-line interface.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check
//! fails, 2 for usage and input errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::bounds::{
    equiangular_fixed_angle_bound, equiangular_max_bound, harmonic_bound, musin_bound, s_distance_bound,
    two_distance_bound, two_distance_max_bound, BoundReport, FactTable, Mode,
};
use crate::config::{
    derive_set, generate_named, generate_simplex_face_centers, lift_to_equiangular, parse_configuration,
    switch_to_common_product, write_configuration, ConfigError, Configuration, NamedFamily, PointConfiguration,
};
use crate::extremal::{certify_extremal, ExtremalCertificate};
use crate::report::{csv_field, Report};
use crate::scalar::{parse_rational, Literal, Scalar, DEFAULT_TOLERANCE};
use crate::verify::{verify, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "sphere-sets", version, about = "Bounds and certificates for spherical few-distance sets")]
pub struct Cli {
    /// Tolerance for configurations read in the floating regime.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Which results the dimension-wise bounds may rely on.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Derivation)]
    pub mode: ModeArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Derivation,
    AssumeTheorems,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Derivation => Mode::Derivation,
            ModeArg::AssumeTheorems => Mode::AssumeTheorems,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form bounds and dimension-wise tables.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Full verification of a configuration file.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        /// Use the smaller numerator of the zonal bounds.
        #[arg(long)]
        regular: bool,
    },
    /// Write a named or parametrised configuration.
    Generate {
        /// octahedron, pentagon, icosahedron, lines28 or simplex-faces.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        output: PathBuf,
    },
    /// Derived set through one point at a given inner product.
    Derive {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        point_index: usize,
        #[arg(long, allow_hyphen_values = true)]
        product: String,
        #[arg(long)]
        output: PathBuf,
    },
    /// Negate points of an equiangular set so all products with one point agree.
    Switch {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        point_index: usize,
        #[arg(long)]
        output: PathBuf,
    },
    /// Lift a two-distance set with alpha + beta < 0 to an equiangular set.
    Lift {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Staged certificate for an extremal equiangular set.
    CertifyExtremal {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        a: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    /// One row per dimension: two-distance and equiangular maxima.
    Table {
        #[arg(long)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
    },
    /// Equiangular bound in R^n, for one angle arccos(1/a) or over all angles.
    Equiangular {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        a: Option<String>,
    },
    /// Bounds for two-distance sets with inner products alpha, beta.
    TwoDistance {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        regular: bool,
    },
}

/// Failure of a command, split by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unreadable input (exit 2).
    Usage(anyhow::Error),
    /// A mathematical precondition or check failed (exit 1).
    Failure(anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(e) | CliError::Failure(e) => write!(f, "{e:#}"),
        }
    }
}

fn usage(e: impl Into<anyhow::Error>) -> CliError {
    CliError::Usage(e.into())
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        match e {
            ConfigError::Syntax { .. }
            | ConfigError::NormViolation { .. }
            | ConfigError::NotUnit { .. }
            | ConfigError::Arity { .. }
            | ConfigError::Metric
            | ConfigError::Index { .. }
            | ConfigError::Parameters(_)
            | ConfigError::UnknownFamily(_) => CliError::Usage(e.into()),
            _ => CliError::Failure(e.into()),
        }
    }
}

fn io_err(e: io::Error) -> CliError {
    CliError::Usage(e.into())
}

/// Parses arguments, runs the command and maps the outcome to an exit code.
pub fn main_entry() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Runs one invocation; `Ok(false)` means a check failed.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    match &cli.command {
        Command::Bounds(b) => run_bounds(cli, b, out),
        Command::Verify {
            input,
            max_degree,
            regular,
        } => {
            let cfg = read_configuration(input, cli.tolerance)?;
            let options = VerifyOptions {
                max_degree: *max_degree,
                regular: *regular,
                facts: FactTable::shipped(),
            };
            let report = verify(&cfg, &options)?;
            emit(cli, &report, out)?;
            Ok(report.pass())
        }
        Command::Generate { family, n, s, output } => {
            let cfg: Configuration = if family == "simplex-faces" {
                let (n, s) = n
                    .zip(*s)
                    .ok_or_else(|| usage(anyhow!("simplex-faces needs --n and --s")))?;
                generate_simplex_face_centers(n, s)?.into()
            } else {
                generate_named(family.parse::<NamedFamily>()?)
            };
            write_output(output, &cfg, out, "generated")
        }
        Command::Derive {
            input,
            point_index,
            product,
            output,
        } => {
            let cfg = read_configuration(input, cli.tolerance)?;
            let derived: Configuration = match &cfg {
                Configuration::Exact(c) => {
                    let p = parse_rational(product)
                        .map_err(|e| usage(anyhow!("{e}; exact configurations need a fraction product")))?;
                    derive_set(c, *point_index, &p)?.into()
                }
                Configuration::Floating(c) => {
                    let p: Literal = product.parse().map_err(usage)?;
                    derive_set(c, *point_index, &p.to_f64())?.into()
                }
            };
            write_output(output, &derived, out, "derived")
        }
        Command::Switch {
            input,
            point_index,
            output,
        } => {
            let cfg = read_configuration(input, cli.tolerance)?;
            let switched: Configuration = match &cfg {
                Configuration::Exact(c) => switch_to_common_product(c, *point_index)?.into(),
                Configuration::Floating(c) => switch_to_common_product(c, *point_index)?.into(),
            };
            write_output(output, &switched, out, "switched")
        }
        Command::Lift { input, output } => {
            let cfg = read_configuration(input, cli.tolerance)?;
            let (lifted, summary): (Configuration, String) = match &cfg {
                Configuration::Exact(c) => {
                    let (l, p) = lift_to_equiangular(c)?;
                    (l.into(), lift_summary(&p.t_squared, &p.gamma))
                }
                Configuration::Floating(c) => {
                    let (l, p) = lift_to_equiangular(c)?;
                    (l.into(), lift_summary(&p.t_squared, &p.gamma))
                }
            };
            writeln!(out, "{summary}").map_err(io_err)?;
            write_output(output, &lifted, out, "lifted")
        }
        Command::CertifyExtremal { input, a } => {
            let cfg = read_configuration(input, cli.tolerance)?;
            let cert = match &cfg {
                Configuration::Exact(c) => certify_extremal(c, *a),
                Configuration::Floating(c) => certify_extremal(c, *a),
            };
            let report = certificate_report(&cert);
            emit(cli, &report, out)?;
            Ok(cert.pass())
        }
    }
}

fn lift_summary<S: Scalar>(t_squared: &S, gamma: &S) -> String {
    format!("t^2 = {}, common angle alpha = {}", t_squared.render(), gamma.render())
}

fn read_configuration(path: &Path, tolerance: f64) -> Result<Configuration, CliError> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(CliError::Usage)?;
    parse_configuration(&text, tolerance).map_err(|e| usage(anyhow!("{}: {e}", path.display())))
}

fn write_output(path: &Path, cfg: &Configuration, out: &mut dyn Write, verb: &str) -> Result<bool, CliError> {
    fs::write(path, write_configuration(cfg))
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(CliError::Usage)?;
    writeln!(
        out,
        "{verb} {} points in dimension {} ({} regime) -> {}",
        cfg.len(),
        cfg.dim(),
        cfg.regime(),
        path.display()
    )
    .map_err(io_err)?;
    Ok(true)
}

fn emit(cli: &Cli, report: &Report, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match cli.format {
        Format::Text => report.to_text(),
        Format::Csv => report.to_csv(),
    };
    out.write_all(text.as_bytes()).map_err(io_err)
}

/// Adds the fields of a bound report under its own section.
pub fn bound_entries(report: &mut Report, b: &BoundReport) {
    let section = b.name;
    for (k, v) in &b.inputs {
        report.info(section, format!("input {k}"), v.clone());
    }
    report.info(section, "source", b.source);
    match (&b.value, &b.exact) {
        (Some(v), Some(exact)) => {
            report.info(section, "value", v.to_string());
            if !exact.is_integer() {
                report.info(section, "exact value", exact.to_string());
            }
        }
        _ => report.info(section, "not applicable", b.reason.clone()),
    }
    for (label, v) in &b.cases {
        report.info(section, format!("candidate {label}"), v.to_string());
    }
    if let Some(w) = &b.winner {
        report.info(section, "attained by", w.clone());
    }
    for n in &b.notes {
        report.info(section, "note", n.clone());
    }
}

fn run_bounds(cli: &Cli, cmd: &BoundsCommand, out: &mut dyn Write) -> Result<bool, CliError> {
    let mode = Mode::from(cli.mode);
    let facts = FactTable::shipped();
    let mut report = Report::new();
    match cmd {
        BoundsCommand::Table { n_min, n_max } => {
            if *n_min < 2 || n_min > n_max {
                return Err(usage(anyhow!("need 2 <= n-min <= n-max, got {n_min}..{n_max}")));
            }
            let text = bounds_table(*n_min, *n_max, mode, cli.format, &facts).map_err(usage)?;
            out.write_all(text.as_bytes()).map_err(io_err)?;
            return Ok(true);
        }
        BoundsCommand::Equiangular { n, a } => {
            let b = match a {
                Some(a) => {
                    let a = parse_rational(a).map_err(usage)?;
                    equiangular_fixed_angle_bound(*n, &a)
                }
                None => equiangular_max_bound(*n, &facts),
            }
            .map_err(usage)?;
            bound_entries(&mut report, &b);
        }
        BoundsCommand::TwoDistance { n, alpha, beta, regular } => {
            let alpha = parse_rational(alpha).map_err(usage)?;
            let beta = parse_rational(beta).map_err(usage)?;
            let (hi, lo) = if alpha > beta { (&alpha, &beta) } else { (&beta, &alpha) };
            let reports = [
                two_distance_bound(*n, hi, lo, *regular),
                s_distance_bound(*n, &[hi.clone(), lo.clone()], *regular),
                musin_bound(*n, hi, lo),
                harmonic_bound(*n, 2),
                two_distance_max_bound(*n, mode, &facts),
            ];
            for b in reports {
                bound_entries(&mut report, &b.map_err(usage)?);
            }
        }
    }
    emit(cli, &report, out)?;
    Ok(true)
}

/// Rows `n, two-distance maximum, equiangular maximum, exceptional flag,
/// winning bounds`, for `n_min..=n_max`.
pub fn bounds_table(
    n_min: u64,
    n_max: u64,
    mode: Mode,
    format: Format,
    facts: &FactTable,
) -> anyhow::Result<String> {
    let rows: Vec<[String; 6]> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| -> anyhow::Result<[String; 6]> {
            let two = two_distance_max_bound(n, mode, facts)?;
            let eq = equiangular_max_bound(n, facts)?;
            let flag = if two.input("exceptional") == Some("true") { "exceptional" } else { "-" };
            Ok([
                n.to_string(),
                two.value.map(|v| v.to_string()).unwrap_or_default(),
                eq.value.map(|v| v.to_string()).unwrap_or_default(),
                flag.to_string(),
                two.winner.unwrap_or_default(),
                eq.winner.unwrap_or_default(),
            ])
        })
        .collect::<anyhow::Result<_>>()?;
    let header = ["n", "two-distance", "equiangular", "exceptional", "two-distance via", "equiangular via"];
    let mut text = String::new();
    match format {
        Format::Csv => {
            text.push_str(&header.map(csv_field).join(","));
            text.push('\n');
            for r in &rows {
                text.push_str(&r.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
                text.push('\n');
            }
        }
        Format::Text => {
            text.push_str(&format!("# mode: {mode}\n"));
            text.push_str(&header.join(", "));
            text.push('\n');
            for r in &rows {
                text.push_str(&r.join(", "));
                text.push('\n');
            }
        }
    }
    Ok(text)
}

/// Stage-by-stage report for an extremal certificate.
pub fn certificate_report(cert: &ExtremalCertificate) -> Report {
    let mut r = Report::new();
    let section = "extremal certificate";
    r.info(section, "a", cert.a.to_string());
    r.info(section, "points", cert.size.to_string());
    if let Some(p) = cert.expected {
        r.info(section, "expected graph parameters", p.to_string());
    }
    if let Some(s) = cert.spectrum {
        r.info(
            section,
            "expected graph eigenvalues",
            format!("{} x{}, {} x{}", s.e1, s.d1, s.e2, s.d2),
        );
    }
    for (i, stage) in cert.stages.iter().enumerate() {
        r.check("stages", format!("{i} {}", stage.name), stage.detail.clone(), stage.pass);
    }
    if !cert.gram_eigenvalues.is_empty() {
        let parts: Vec<String> = cert.gram_eigenvalues.iter().map(|(v, m)| format!("{v} x{m}")).collect();
        r.info("conclusion", "derived Gram eigenvalues", parts.join(", "));
    }
    if let (Some(rank), Some(dim)) = (cert.gram_rank, cert.concluded_dimension) {
        r.info("conclusion", "derived Gram rank", rank.to_string());
        r.info("conclusion", "concluded dimension", dim.to_string());
    }
    r
}

/// Helper for library users that hold a concrete configuration.
pub fn certify<S: Scalar>(cfg: &PointConfiguration<S>, a: u64) -> Report {
    certificate_report(&certify_extremal(cfg, a))
}
