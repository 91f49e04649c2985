//! The `parahess` command line.
//!
//! Exit status: 0 on success, 1 on domain errors, 2 on usage errors and 3
//! when `verify` finds a failing check.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::format;
use crate::harness::{self, CheckId, Granularity};
use crate::hessvar::{HessenbergFunction, HessenbergVariety, ParabolicHessenbergVariety};
use crate::nilpotent::{Nilpotent, Partition};
use crate::schubert::{bruhat_lower_ideal, poincare_schubert_union};
use crate::symgroup::{ParabolicData, Permutation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "parahess", version, about = "Cells and Poincaré polynomials of nilpotent Hessenberg varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,

    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Poincaré polynomial of B(X,H).
    Poincare(SpaceArgs),
    /// Permutation flags of the Springer fiber with tableaux and cell dimensions.
    Springer(PartitionArg),
    /// Schubert point w_T of a Springer-fiber flag wB.
    SchubertPoint(PointArgs),
    /// Schubert varieties whose union has the Betti numbers of B(X,p_J).
    Union(SpaceArgs),
    /// Candidate irreducible components of B(X,p_J).
    Components(SpaceArgs),
    /// Exhaustive checks for every degree up to --n.
    Verify(VerifyArgs),
    /// Cell or summary dataset for degree --n.
    Census(CensusArgs),
}

#[derive(Debug, Args)]
pub struct PartitionArg {
    /// Jordan type, e.g. "2,1,1".
    #[arg(long)]
    pub partition: String,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("space").required(true).args(["parabolic", "hessenberg"]))]
pub struct SpaceArgs {
    #[arg(long)]
    pub partition: String,

    /// Simple roots J, e.g. "1,3"; "" for the Borel.
    #[arg(long, allow_hyphen_values = true)]
    pub parabolic: Option<String>,

    /// Hessenberg function h(1),...,h(n).
    #[arg(long)]
    pub hessenberg: Option<String>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("flag").required(true).args(["perm", "word"]))]
pub struct PointArgs {
    #[arg(long)]
    pub partition: String,

    /// One-line notation, e.g. "1,4,2,3".
    #[arg(long)]
    pub perm: Option<String>,

    /// Reduced or unreduced word, "2,1,3,2" for s2 s1 s3 s2.
    #[arg(long)]
    pub word: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,

    /// Comma-separated check ids, or "all".
    #[arg(long, default_value = "all")]
    pub checks: String,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub n: usize,

    #[arg(long, value_enum, default_value_t = CensusGranularity::Summaries)]
    pub granularity: CensusGranularity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CensusGranularity {
    Cells,
    Summaries,
}

/// Rendered output and the exit status it carries.
struct Output {
    body: String,
    status: i32,
}

impl From<String> for Output {
    fn from(body: String) -> Self {
        Output { body, status: EXIT_OK }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(out) => match emit(&cli, &out.body) {
            Ok(()) => out.status,
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_DOMAIN
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn emit(cli: &Cli, body: &str) -> io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, body),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let f = cli.format;
    match &cli.command {
        Command::Poincare(a) => poincare(a, f).map(Output::from),
        Command::Springer(a) => springer(a, f).map(Output::from),
        Command::SchubertPoint(a) => schubert_point(a, f).map(Output::from),
        Command::Union(a) => union(a, f).map(Output::from),
        Command::Components(a) => components(a, f).map(Output::from),
        Command::Verify(a) => verify(a, f),
        Command::Census(a) => census(a, f).map(Output::from),
    }
}

fn json_body(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn csv_body(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Parse(format!("csv: {e}"));
    wtr.write_record(header).map_err(err)?;
    for r in rows {
        wtr.write_record(&r).map_err(err)?;
    }
    let bytes = wtr.into_inner().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse()
}

enum Space {
    Parabolic(ParabolicData),
    Hessenberg(HessenbergFunction),
}

fn parse_space(a: &SpaceArgs, n: usize) -> Result<Space> {
    match (&a.parabolic, &a.hessenberg) {
        (Some(j), _) => Ok(Space::Parabolic(ParabolicData::new(n, &format::parse_list(j)?)?)),
        (None, Some(h)) => Ok(Space::Hessenberg(h.parse()?)),
        (None, None) => unreachable!("clap requires one of --parabolic and --hessenberg"),
    }
}

/// Resolves a space that must be parabolic; a non-parabolic `h` is a
/// domain error naming the predicate it fails.
fn parabolic_variety(a: &SpaceArgs) -> Result<ParabolicHessenbergVariety> {
    let lambda = parse_partition(&a.partition)?;
    match parse_space(a, lambda.size())? {
        Space::Parabolic(p) => ParabolicHessenbergVariety::new(&lambda, &p),
        Space::Hessenberg(h) => ParabolicHessenbergVariety::from_hessenberg(&lambda, &h),
    }
}

fn poincare(a: &SpaceArgs, f: OutputFormat) -> Result<String> {
    let lambda = parse_partition(&a.partition)?;
    let (variety, space_json) = match parse_space(a, lambda.size())? {
        Space::Parabolic(p) => {
            let v = ParabolicHessenbergVariety::new(&lambda, &p)?;
            (v.variety().clone(), json!({ "J": p.simple_roots() }))
        }
        Space::Hessenberg(h) => (HessenbergVariety::new(&lambda, &h)?, json!({ "h": h.values() })),
    };
    let poly = variety.poincare();
    Ok(match f {
        OutputFormat::Text => format!("{poly}\n"),
        OutputFormat::Json => {
            let mut v = json!({ "lambda": lambda, "poincare": poly });
            v.as_object_mut()
                .expect("object")
                .extend(space_json.as_object().expect("object").clone());
            json_body(&v)
        }
        OutputFormat::Csv => csv_body(
            &["degree", "cells"],
            poly.coeffs().iter().enumerate().map(|(k, c)| vec![k.to_string(), c.to_string()]),
        )?,
    })
}

fn springer(a: &PartitionArg, f: OutputFormat) -> Result<String> {
    let lambda = parse_partition(&a.partition)?;
    let x = Nilpotent::new(&lambda);
    let rows: Vec<(Permutation, String, usize)> = crate::symgroup::enumerate_sn(x.degree())
        .filter(|w| x.springer_contains(w).expect("degrees agree"))
        .map(|w| {
            let t = x.springer_tableau(&w).expect("degrees agree").to_string();
            let d = x.springer_cell_dim(&w).expect("in Springer fiber");
            (w, t, d)
        })
        .collect();
    Ok(match f {
        OutputFormat::Text => {
            let mut s = String::new();
            for (w, t, d) in &rows {
                writeln!(s, "{w}\t{t}\t{d}").expect("string write");
            }
            s
        }
        OutputFormat::Json => json_body(&Value::Array(
            rows.iter()
                .map(|(w, t, d)| json!({ "w": w, "tableau": t, "dim": d }))
                .collect(),
        )),
        OutputFormat::Csv => csv_body(
            &["w", "tableau", "dim"],
            rows.iter().map(|(w, t, d)| vec![w.to_string(), t.clone(), d.to_string()]),
        )?,
    })
}

fn schubert_point(a: &PointArgs, f: OutputFormat) -> Result<String> {
    let lambda = parse_partition(&a.partition)?;
    let n = lambda.size();
    let w = match (&a.perm, &a.word) {
        (Some(p), _) => p.parse::<Permutation>()?,
        (None, Some(word)) => Permutation::from_word(&format::parse_list(word)?, n)?,
        (None, None) => unreachable!("clap requires one of --perm and --word"),
    };
    if w.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, found: w.degree() });
    }
    let sp = Nilpotent::new(&lambda).schubert_point(&w)?;
    Ok(match f {
        OutputFormat::Text => format!("{}\n{}\n", sp.strings, sp.point),
        OutputFormat::Json => json_body(&json!({
            "lambda": lambda,
            "w": sp.source,
            "tableau": sp.tableau,
            "string_lengths": sp.string_lengths(),
            "word": sp.strings.word(),
            "point": sp.point,
        })),
        OutputFormat::Csv => csv_body(
            &["w", "tableau", "string_lengths", "word", "point"],
            [vec![
                sp.source.to_string(),
                sp.tableau.to_string(),
                format::join(&sp.string_lengths()),
                format::join(&sp.strings.word()),
                sp.point.to_string(),
            ]],
        )?,
    })
}

fn union(a: &SpaceArgs, f: OutputFormat) -> Result<String> {
    let x = parabolic_variety(a)?;
    let n = x.parabolic().degree();
    let tops = x.schubert_union_tops();
    let ideal = bruhat_lower_ideal(&tops, n)?;
    let poly = poincare_schubert_union(&tops, n)?;
    Ok(match f {
        OutputFormat::Text => {
            let mut s = String::new();
            for t in &tops {
                writeln!(s, "{t}\t{}", t.strings()).expect("string write");
            }
            writeln!(s, "{poly}").expect("string write");
            s
        }
        OutputFormat::Json => json_body(&json!({
            "lambda": x.nilpotent().partition,
            "J": x.parabolic().simple_roots(),
            "tops": tops,
            "ideal_size": ideal.len(),
            "poincare": poly,
        })),
        OutputFormat::Csv => csv_body(
            &["top", "word", "length"],
            tops.iter()
                .map(|t| vec![t.to_string(), format::join(&t.reduced_word()), t.length().to_string()]),
        )?,
    })
}

fn components(a: &SpaceArgs, f: OutputFormat) -> Result<String> {
    let x = parabolic_variety(a)?;
    let cands = x.component_candidates();
    Ok(match f {
        OutputFormat::Text => {
            let mut s = String::new();
            for c in &cands {
                writeln!(
                    s,
                    "v={}\ttop={}\tschubert_top={}\tdim={}\tfull={}\tmaximal={}",
                    c.v, c.top_cell, c.schubert_top, c.cell_dim, c.full_cell, c.heuristic_maximal
                )
                .expect("string write");
            }
            s
        }
        OutputFormat::Json => json_body(&serde_json::to_value(&cands).expect("candidates serialize")),
        OutputFormat::Csv => csv_body(
            &["v", "top_cell", "schubert_top", "cell_dim", "full_cell", "heuristic_maximal"],
            cands.iter().map(|c| {
                vec![
                    c.v.to_string(),
                    c.top_cell.to_string(),
                    c.schubert_top.to_string(),
                    c.cell_dim.to_string(),
                    c.full_cell.to_string(),
                    c.heuristic_maximal.to_string(),
                ]
            }),
        )?,
    })
}

fn verify(a: &VerifyArgs, f: OutputFormat) -> Result<Output> {
    let checks = CheckId::parse_list(&a.checks)?;
    let reports = harness::run_checks(a.n, &checks)?;
    let status = if reports.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_VERIFY_FAILED };
    let body = match f {
        OutputFormat::Text => {
            let mut s = String::new();
            for r in &reports {
                writeln!(
                    s,
                    "{} {} n={} cases={} failures={} out_of_hypothesis={} {:.3}s",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.check_id,
                    r.n,
                    r.cases_run,
                    r.failures.len(),
                    r.out_of_hypothesis.len(),
                    r.elapsed_secs
                )
                .expect("string write");
                for fail in &r.failures {
                    writeln!(s, "  failure {fail}").expect("string write");
                }
                for note in &r.out_of_hypothesis {
                    writeln!(s, "  note {note}").expect("string write");
                }
            }
            s
        }
        OutputFormat::Json => json_body(&serde_json::to_value(&reports).expect("reports serialize")),
        OutputFormat::Csv => csv_body(
            &["check_id", "n", "cases_run", "failures", "out_of_hypothesis", "elapsed_secs"],
            reports.iter().map(|r| {
                vec![
                    r.check_id.clone(),
                    r.n.to_string(),
                    r.cases_run.to_string(),
                    r.failures.len().to_string(),
                    r.out_of_hypothesis.len().to_string(),
                    format!("{:.6}", r.elapsed_secs),
                ]
            }),
        )?,
    };
    Ok(Output { body, status })
}

fn census(a: &CensusArgs, f: OutputFormat) -> Result<String> {
    let granularity = match a.granularity {
        CensusGranularity::Cells => Granularity::Cells,
        CensusGranularity::Summaries => Granularity::Summaries,
    };
    let data = harness::census(a.n, granularity)?;
    match f {
        OutputFormat::Json => Ok(json_body(&data.to_json())),
        OutputFormat::Text | OutputFormat::Csv => {
            let mut buf = Vec::new();
            data.write_csv(&mut buf)?;
            Ok(String::from_utf8(buf).expect("csv output is utf-8"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn usage_error_is_two() {
        assert_eq!(main_with_args(["parahess", "poincare", "--partition", "2,2"]), EXIT_USAGE);
        assert_eq!(main_with_args(["parahess", "frobnicate"]), EXIT_USAGE);
    }
}
