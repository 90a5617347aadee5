//! Command-line front end.
//!
//! Every command returns an [`Outcome`] (exit code plus the text destined for
//! stdout and stderr) so the binary stays a thin shell and the commands can be
//! tested in-process. Exit codes: 0 when every check passed, 1 when some
//! identity failed, 2 for bad input.

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{parse_lie_type, Family, LieType};
use crate::error::Result;
use crate::orbit::{self, Checks, VerificationReport};
use crate::rational::{format_vec, Rational};
use crate::roots::RootSystem;

/// Largest rank the CLI accepts.
pub const MAX_RANK: usize = 64;

pub const DEFAULT_MAX_RANK: usize = 12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "minorbit",
    version,
    about = "Exact root-system checks for the minimal nilpotent orbit and the dual Coxeter number"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify every identity for one Lie type, e.g. `verify E8`.
    Verify {
        lie_type: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// One verification row per Lie type in a battery.
    Table {
        #[arg(long, value_delimiter = ',', value_parser = parse_family, default_value = "A,B,C,D,E,F,G")]
        families: Vec<Family>,
        #[arg(long, default_value_t = DEFAULT_MAX_RANK, value_parser = parse_max_rank)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// List the positive roots of a Lie type with their classification.
    Roots {
        lie_type: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    let mut chars = s.trim().chars();
    match (chars.next().and_then(Family::from_letter), chars.next()) {
        (Some(f), None) => Ok(f),
        _ => Err(format!(
            "unknown family {s:?}; expected one of A, B, C, D, E, F, G"
        )),
    }
}

fn parse_max_rank(s: &str) -> std::result::Result<usize, String> {
    let rank: usize = s.parse().map_err(|_| format!("invalid rank {s:?}"))?;
    if rank > MAX_RANK {
        return Err(format!("max rank {rank} exceeds the limit of {MAX_RANK}"));
    }
    Ok(rank)
}

/// Exit code and captured output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Families and a rank bound; expands to every valid type within them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatterySpec {
    families: Vec<Family>,
    max_rank: usize,
}

impl BatterySpec {
    pub fn new(families: &[Family], max_rank: usize) -> std::result::Result<Self, String> {
        if max_rank > MAX_RANK {
            return Err(format!(
                "max rank {max_rank} exceeds the limit of {MAX_RANK}"
            ));
        }
        let mut families = families.to_vec();
        families.sort();
        families.dedup();
        Ok(BatterySpec { families, max_rank })
    }

    /// Invalid (family, rank) pairs are skipped.
    pub fn types(&self) -> Vec<LieType> {
        self.families
            .iter()
            .flat_map(|&f| (1..=self.max_rank).filter_map(move |r| LieType::new(f, r).ok()))
            .collect()
    }
}

impl Default for BatterySpec {
    fn default() -> Self {
        BatterySpec {
            families: Family::ALL.to_vec(),
            max_rank: DEFAULT_MAX_RANK,
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Verify { lie_type, format } => cmd_verify(&lie_type, format),
        Command::Table {
            families,
            max_rank,
            format,
        } => match BatterySpec::new(&families, max_rank) {
            Ok(battery) => cmd_table(&battery, format),
            Err(msg) => Outcome::usage(msg),
        },
        Command::Roots { lie_type, format } => cmd_roots(&lie_type, format),
    }
}

fn parse_cli_type(text: &str) -> std::result::Result<LieType, Outcome> {
    let t = parse_lie_type(text).map_err(Outcome::usage)?;
    if t.rank() > MAX_RANK {
        return Err(Outcome::usage(format!(
            "rank {} exceeds the limit of {MAX_RANK}",
            t.rank()
        )));
    }
    Ok(t)
}

pub fn cmd_verify(type_text: &str, format: OutputFormat) -> Outcome {
    let t = match parse_cli_type(type_text) {
        Ok(t) => t,
        Err(outcome) => return outcome,
    };
    let report = match orbit::verify(t) {
        Ok(r) => r,
        Err(err) => {
            return Outcome {
                code: EXIT_CHECK_FAILED,
                stdout: String::new(),
                stderr: format!("error: {t}: {err}\n"),
            }
        }
    };
    let stdout = match format {
        OutputFormat::Text => report_text(&report),
        OutputFormat::Json => json(&report),
        OutputFormat::Csv => reports_csv(std::slice::from_ref(&report)),
    };
    let (code, stderr) = failure_summary(std::slice::from_ref(&report));
    Outcome {
        code,
        stdout,
        stderr,
    }
}

pub fn cmd_table(battery: &BatterySpec, format: OutputFormat) -> Outcome {
    let results: Vec<(LieType, Result<VerificationReport>)> = battery
        .types()
        .into_par_iter()
        .map(|t| (t, orbit::verify(t)))
        .collect();
    let mut reports = Vec::with_capacity(results.len());
    let mut errors = String::new();
    for (t, result) in results {
        match result {
            Ok(r) => reports.push(r),
            Err(err) => errors.push_str(&format!("error: {t}: {err}\n")),
        }
    }
    let stdout = match format {
        OutputFormat::Text => table_text(&reports),
        OutputFormat::Json => json(&reports),
        OutputFormat::Csv => reports_csv(&reports),
    };
    let (mut code, mut stderr) = failure_summary(&reports);
    if !errors.is_empty() {
        code = EXIT_CHECK_FAILED;
        stderr.push_str(&errors);
    }
    Outcome {
        code,
        stdout,
        stderr,
    }
}

pub fn cmd_roots(type_text: &str, format: OutputFormat) -> Outcome {
    let t = match parse_cli_type(type_text) {
        Ok(t) => t,
        Err(outcome) => return outcome,
    };
    let dump = match RootSystem::for_type(t).and_then(|rs| roots_dump(&rs)) {
        Ok(d) => d,
        Err(err) => {
            return Outcome {
                code: EXIT_CHECK_FAILED,
                stdout: String::new(),
                stderr: format!("error: {t}: {err}\n"),
            }
        }
    };
    let stdout = match format {
        OutputFormat::Text => roots_text(&dump),
        OutputFormat::Json => json(&dump),
        OutputFormat::Csv => roots_csv(&dump),
    };
    Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    }
}

fn failure_summary(reports: &[VerificationReport]) -> (i32, String) {
    let mut stderr = String::new();
    for report in reports.iter().filter(|r| !r.passed()) {
        for (name, ok) in report.checks.named() {
            if !ok {
                stderr.push_str(&format!("{}: check {name} failed\n", report.lie_type));
            }
        }
        for line in &report.failures {
            stderr.push_str(&format!("{}: {line}\n", report.lie_type));
        }
    }
    let code = if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    (code, stderr)
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize");
    out.push('\n');
    out
}

/// Fixed CSV column order for reports.
pub fn report_csv_header() -> Vec<&'static str> {
    let mut header = vec![
        "type",
        "num_roots",
        "num_positive",
        "h_dual",
        "num_special",
        "dim_root_count",
        "dim_dual_coxeter",
        "l_theta",
    ];
    header.extend(Checks::NAMES);
    header
}

fn report_csv_row(r: &VerificationReport) -> Vec<String> {
    let mut row = vec![
        r.lie_type.to_string(),
        r.num_roots.to_string(),
        r.num_positive.to_string(),
        r.h_dual.to_string(),
        r.num_special.to_string(),
        r.dim_root_count.to_string(),
        r.dim_dual_coxeter.to_string(),
        r.l_theta.to_string(),
    ];
    row.extend(r.checks.values().iter().map(ToString::to_string));
    row
}

fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(report_csv_header())
        .expect("write to memory");
    for r in reports {
        writer
            .write_record(report_csv_row(r))
            .expect("write to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("csv is utf-8")
}

fn report_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let rows: [(&str, String); 8] = [
        ("type", r.lie_type.to_string()),
        ("roots", r.num_roots.to_string()),
        ("positive roots", r.num_positive.to_string()),
        ("dual Coxeter number", r.h_dual.to_string()),
        ("special roots", r.num_special.to_string()),
        ("dim (1 + #nonorthogonal)", r.dim_root_count.to_string()),
        ("dim (2h_dual - 2)", r.dim_dual_coxeter.to_string()),
        ("length of r_theta", r.l_theta.to_string()),
    ];
    for (label, value) in rows {
        out.push_str(&format!("{label:<26}{value}\n"));
    }
    out.push_str("checks\n");
    for (name, ok) in r.checks.named() {
        out.push_str(&format!(
            "  {name:<24}{}\n",
            if ok { "pass" } else { "FAIL" }
        ));
    }
    out
}

fn table_text(reports: &[VerificationReport]) -> String {
    let mut out = format!(
        "{:<6}{:>7}{:>9}{:>7}{:>9}{:>10}{:>12}{:>9}  {}\n",
        "type",
        "roots",
        "positive",
        "h_dual",
        "special",
        "dim_roots",
        "dim_h_dual",
        "l_theta",
        "checks"
    );
    for r in reports {
        out.push_str(&format!(
            "{:<6}{:>7}{:>9}{:>7}{:>9}{:>10}{:>12}{:>9}  {}\n",
            r.lie_type.to_string(),
            r.num_roots,
            r.num_positive,
            r.h_dual,
            r.num_special,
            r.dim_root_count,
            r.dim_dual_coxeter,
            r.l_theta,
            if r.passed() { "pass" } else { "FAIL" }
        ));
    }
    out
}

/// One positive root in a [`RootsDump`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRecord {
    pub coords: Vec<i64>,
    pub height: i64,
    pub norm_squared: Rational,
    pub is_theta: bool,
    pub is_special: bool,
    pub is_orthogonal_to_theta: bool,
}

/// Output of the `roots` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsDump {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub positive_roots: Vec<RootRecord>,
    pub theta: Vec<i64>,
    pub rho: Vec<Rational>,
    pub h_dual: i64,
    pub num_special: usize,
}

pub fn roots_dump(rs: &RootSystem) -> Result<RootsDump> {
    let lie_type = rs.lie_type().ok_or(crate::error::Error::MissingType)?;
    let special = orbit::special_roots(rs);
    let theta = rs.theta();
    let positive_roots = rs
        .positives()
        .iter()
        .map(|alpha| RootRecord {
            coords: alpha.coords().to_vec(),
            height: alpha.height(),
            norm_squared: rs.pairing(alpha, alpha),
            is_theta: alpha == theta,
            is_special: special.contains(alpha),
            is_orthogonal_to_theta: rs.pairing(alpha, theta).is_zero(),
        })
        .collect();
    Ok(RootsDump {
        lie_type,
        positive_roots,
        theta: theta.coords().to_vec(),
        rho: rs.rho().to_vec(),
        h_dual: orbit::dual_coxeter(rs)?,
        num_special: special.len(),
    })
}

fn join_coords(coords: &[i64], sep: &str) -> String {
    coords
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn roots_text(d: &RootsDump) -> String {
    let coord_width = d
        .positive_roots
        .iter()
        .map(|r| join_coords(&r.coords, ", ").len() + 2)
        .max()
        .unwrap_or(6)
        .max(6);
    let mut out = format!(
        "positive roots of {} ({})\n",
        d.lie_type,
        d.positive_roots.len()
    );
    out.push_str(&format!(
        "{:<w$}  {:>6}  {:>6}  {:<5}  {:<7}  {}\n",
        "coords",
        "height",
        "norm2",
        "theta",
        "special",
        "orthogonal",
        w = coord_width
    ));
    for r in &d.positive_roots {
        out.push_str(&format!(
            "{:<w$}  {:>6}  {:>6}  {:<5}  {:<7}  {}\n",
            format!("[{}]", join_coords(&r.coords, ", ")),
            r.height,
            r.norm_squared.to_string(),
            yes_no(r.is_theta),
            yes_no(r.is_special),
            yes_no(r.is_orthogonal_to_theta),
            w = coord_width
        ));
    }
    out.push_str(&format!("theta: [{}]\n", join_coords(&d.theta, ", ")));
    out.push_str(&format!("rho: {}\n", format_vec(&d.rho)));
    out.push_str(&format!("h_dual: {}\n", d.h_dual));
    out.push_str(&format!("special roots: {}\n", d.num_special));
    out
}

// Coordinates are space-separated inside one field. The footer (θ, ρ, h∨, #𝕊)
// is omitted so the output stays a plain table.
fn roots_csv(d: &RootsDump) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "coords",
            "height",
            "norm_squared",
            "is_theta",
            "is_special",
            "is_orthogonal_to_theta",
        ])
        .expect("write to memory");
    for r in &d.positive_roots {
        writer
            .write_record([
                join_coords(&r.coords, " "),
                r.height.to_string(),
                r.norm_squared.to_string(),
                r.is_theta.to_string(),
                r.is_special.to_string(),
                r.is_orthogonal_to_theta.to_string(),
            ])
            .expect("write to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("csv is utf-8")
}
