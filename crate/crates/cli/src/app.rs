use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use dmod_core::oracle::{default_rmax, verify_report, DimensionTable};
use dmod_core::{
    bernstein_polynomial_with, is_member, kolchin_polynomial, BernsteinReport, BuchbergerOptions, ModulePresentation,
    NumericalPolynomial, PointSet,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;
use thiserror::Error;

use crate::parse::{parse, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "dmod",
    version,
    about = "Gröbner bases and Bernstein polynomials of D-modules"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a Gröbner basis of the relation module.
    Groebner(InputArgs),
    /// Print χ(t) in the binomial and monomial bases.
    Bernstein(InputArgs),
    /// Print d, a_d, m(M), δ(M) and the Krull type and dimension.
    Invariants(InputArgs),
    /// Compare χ(r) with a direct count of standard monomials.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Largest r to check.
        #[arg(long)]
        rmax: Option<u64>,
    },
    /// Kolchin polynomial of a point set in N^m.
    Kolchin {
        /// Points as "(2,0);(0,3)".
        #[arg(long, default_value = "")]
        points: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Presentation file, or `-` for stdin.
    pub file: PathBuf,
    #[arg(long)]
    pub json: bool,
    /// Drop basis elements whose leading monomial is a multiple of another's.
    #[arg(long)]
    pub reduce_basis: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("invalid --points: {0}")]
    Points(String),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("internal error: {0}")]
    Internal(String),
    #[error("verification failed for r = {0:?}")]
    Mismatch(Vec<u64>),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Points(_) | CliError::Read { .. } => 1,
            CliError::Internal(_) | CliError::Io(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

/// Machine-readable report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub n: usize,
    pub m: usize,
    pub groebner: Vec<String>,
    pub chi_binomial: Vec<Number>,
    pub chi_monomial: Vec<String>,
    pub d: i64,
    pub a_d: Number,
    pub multiplicity: Number,
    pub literal_paper_multiplicity: Number,
    pub delta: Number,
    pub krull_type: String,
    pub krull_dim: Option<Number>,
}

fn number(v: &BigInt) -> Number {
    serde_json::from_str(&v.to_string()).expect("integers are valid JSON numbers")
}

impl JsonReport {
    pub fn new(report: &BernsteinReport) -> Self {
        let inv = &report.invariants;
        JsonReport {
            n: report.n,
            m: report.m,
            groebner: report.groebner_basis.iter().map(|g| g.to_string()).collect(),
            chi_binomial: report.chi.binomial_coeffs().iter().map(number).collect(),
            chi_monomial: report
                .chi
                .to_monomial()
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect(),
            d: inv.d,
            a_d: number(&inv.a_d),
            multiplicity: number(&inv.multiplicity),
            literal_paper_multiplicity: number(&inv.literal_paper_multiplicity),
            delta: number(&inv.delta),
            krull_type: report.krull.krull_type.to_string(),
            krull_dim: report.krull.dim.as_ref().map(number),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonRow {
    pub r: u64,
    pub dim: u64,
    pub chi: Number,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonVerify {
    pub threshold: u64,
    pub agreement_from: Option<u64>,
    pub consistent: bool,
    pub rows: Vec<JsonRow>,
}

impl JsonVerify {
    pub fn new(table: &DimensionTable) -> Self {
        JsonVerify {
            threshold: table.threshold,
            agreement_from: table.agreement_from(),
            consistent: table.is_consistent(),
            rows: table
                .rows
                .iter()
                .map(|row| JsonRow {
                    r: row.r,
                    dim: row.dim,
                    chi: number(&row.chi_at_r),
                    agree: row.agree,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonKolchin {
    pub m: usize,
    pub points: Vec<Vec<u32>>,
    pub omega_binomial: Vec<Number>,
    pub omega_monomial: Vec<String>,
}

fn read_source(path: &PathBuf) -> Result<String, CliError> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    Ok(text)
}

fn report_for(input: &InputArgs) -> Result<BernsteinReport, CliError> {
    let p = parse(&read_source(&input.file)?)?;
    let options = BuchbergerOptions {
        reduce_basis: input.reduce_basis,
        ..BuchbergerOptions::default()
    };
    let report = bernstein_polynomial_with(&p, options);
    check_report(&p, &report)?;
    Ok(report)
}

/// Cheap consistency checks on a freshly computed report.
fn check_report(p: &ModulePresentation, report: &BernsteinReport) -> Result<(), CliError> {
    if let Some(i) = p.relations().iter().position(|f| !is_member(f, &report.groebner_basis)) {
        return Err(CliError::Internal(format!(
            "relation {} does not reduce to zero",
            i + 1
        )));
    }
    let round =
        NumericalPolynomial::from_monomial(&report.chi.to_monomial()).map_err(|e| CliError::Internal(e.to_string()))?;
    if round != report.chi {
        return Err(CliError::Internal("binomial/monomial conversion mismatch".into()));
    }
    Ok(())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

pub fn parse_points(spec: &str, m: usize) -> Result<PointSet, CliError> {
    let mut points = Vec::new();
    for raw in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let inner = raw
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| CliError::Points(format!("'{raw}' is not of the form (a,b,...)")))?;
        let coords = inner
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u32>()
                    .map_err(|_| CliError::Points(format!("bad coordinate '{}'", c.trim())))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        points.push(coords);
    }
    PointSet::new(m, points).map_err(|e| CliError::Points(e.to_string()))
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Groebner(input) => {
            let report = report_for(input)?;
            if input.json {
                return write_json(out, &JsonReport::new(&report));
            }
            for (i, g) in report.groebner_basis.iter().enumerate() {
                writeln!(out, "g{} = {}", i + 1, g)?;
            }
        }
        Command::Bernstein(input) => {
            let report = report_for(input)?;
            if input.json {
                return write_json(out, &JsonReport::new(&report));
            }
            writeln!(out, "chi = {} = {}", report.chi, report.chi.to_monomial())?;
        }
        Command::Invariants(input) => {
            let report = report_for(input)?;
            if input.json {
                return write_json(out, &JsonReport::new(&report));
            }
            let inv = &report.invariants;
            writeln!(out, "d = {}", inv.d)?;
            writeln!(out, "a_d = {}", inv.a_d)?;
            writeln!(out, "m(M) = {}", inv.multiplicity)?;
            writeln!(out, "d! a_d = {}", inv.literal_paper_multiplicity)?;
            writeln!(out, "delta = {}", inv.delta)?;
            writeln!(out, "type {}", report.krull.krull_type)?;
            match &report.krull.dim {
                Some(dim) => writeln!(out, "dim = {dim}")?,
                None => writeln!(out, "dim undetermined")?,
            }
        }
        Command::Verify { input, rmax } => {
            let report = report_for(input)?;
            let rmax =
                rmax.unwrap_or_else(|| default_rmax(&report.groebner_basis).max(report.exactness_threshold() + 5));
            let table = verify_report(&report, rmax);
            if input.json {
                write_json(out, &JsonVerify::new(&table))?;
            } else {
                writeln!(out, "{:>4} {:>12} {:>12}  agree", "r", "dim", "chi(r)")?;
                for row in &table.rows {
                    writeln!(out, "{:>4} {:>12} {:>12}  {}", row.r, row.dim, row.chi_at_r, row.agree)?;
                }
                writeln!(out, "threshold = {}", table.threshold)?;
                match table.agreement_from() {
                    Some(r) => writeln!(out, "agreement from r = {r}")?,
                    None => writeln!(out, "no agreement at r = {rmax}")?,
                }
            }
            let bad: Vec<u64> = table.mismatches().iter().map(|row| row.r).collect();
            if !bad.is_empty() {
                return Err(CliError::Mismatch(bad));
            }
        }
        Command::Kolchin { points, m, json } => {
            let a = parse_points(points, *m)?;
            let omega = kolchin_polynomial(&a);
            if *json {
                return write_json(
                    out,
                    &JsonKolchin {
                        m: *m,
                        points: a.points().to_vec(),
                        omega_binomial: omega.binomial_coeffs().iter().map(number).collect(),
                        omega_monomial: omega.to_monomial().coeffs().iter().map(|c| c.to_string()).collect(),
                    },
                );
            }
            writeln!(out, "omega = {} = {}", omega, omega.to_monomial())?;
        }
    }
    Ok(())
}
