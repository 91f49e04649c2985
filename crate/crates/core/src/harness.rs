//! Exhaustive verification over every Jordan type `λ ⊢ n` and every
//! parabolic subset `J`, and census datasets of the same sweep.
//!
//! Work is split across `(λ, J)` pairs with rayon; every pair is pure and
//! results are gathered in canonical order (partitions in decreasing
//! lexicographic order, `J` by ascending bitmask, permutations
//! lexicographic), so output does not depend on scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::io;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format;
use crate::hessvar::ParabolicHessenbergVariety;
use crate::nilpotent::{highest_form_rootset, is_highest_form, phi_v_closure, phi_v_filling, Nilpotent, Partition};
use crate::schubert::{is_lower_ideal_within, MainTheoremReport};
use crate::symgroup::{enumerate_sn, ParabolicData, Permutation};

pub const MAX_HARNESS_DEGREE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    FixedPoints,
    ParabolicDimension,
    PoincareCorollary,
    StringsCoset,
    SchubertCoset,
    SchubertIdeal,
    MainTheorem,
    PhiVEquivalence,
    DimFormulasAgree,
}

impl CheckId {
    pub const ALL: [CheckId; 9] = [
        CheckId::FixedPoints,
        CheckId::ParabolicDimension,
        CheckId::PoincareCorollary,
        CheckId::StringsCoset,
        CheckId::SchubertCoset,
        CheckId::SchubertIdeal,
        CheckId::MainTheorem,
        CheckId::PhiVEquivalence,
        CheckId::DimFormulasAgree,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckId::FixedPoints => "fixed-points",
            CheckId::ParabolicDimension => "parabolic-dimension",
            CheckId::PoincareCorollary => "poincare-corollary",
            CheckId::StringsCoset => "strings-coset",
            CheckId::SchubertCoset => "schubert-coset",
            CheckId::SchubertIdeal => "schubert-ideal",
            CheckId::MainTheorem => "main-theorem",
            CheckId::PhiVEquivalence => "phi-V-equivalence",
            CheckId::DimFormulasAgree => "dim-formulas-agree",
        }
    }

    /// Parses a comma-separated list of ids; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<CheckId>> {
        let mut out = BTreeSet::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if tok == "all" {
                out.extend(Self::ALL);
            } else {
                out.insert(tok.parse()?);
            }
        }
        Ok(out.into_iter().collect())
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub lambda: Partition,
    #[serde(rename = "J")]
    pub j: Option<Vec<usize>>,
    pub witness: Option<Permutation>,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ=({})", self.lambda)?;
        if let Some(j) = &self.j {
            write!(f, " J={{{}}}", format::join(j))?;
        }
        if let Some(w) = &self.witness {
            write!(f, " w=[{w}]")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub n: usize,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    /// Cases outside the three-row/two-column hypothesis where the
    /// statement did not hold. Recorded, never counted as failures.
    pub out_of_hypothesis: Vec<Failure>,
    pub elapsed_secs: f64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of one check on one case (a `λ`, a `J`, or a pair).
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<Failure>,
    informational: Vec<Failure>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.informational.extend(other.informational);
        self
    }

    fn fail(&mut self, lambda: &Partition, j: Option<&ParabolicData>, witness: Option<&Permutation>, detail: impl Into<String>) {
        self.failures.push(failure(lambda, j, witness, detail));
    }

    /// Asserted inside the hypothesis, logged outside it.
    fn hypothesis_fail(&mut self, lambda: &Partition, j: Option<&ParabolicData>, witness: Option<&Permutation>, detail: impl Into<String>) {
        let f = failure(lambda, j, witness, detail);
        if lambda.in_main_hypothesis() {
            self.failures.push(f);
        } else {
            self.informational.push(f);
        }
    }
}

fn failure(lambda: &Partition, j: Option<&ParabolicData>, witness: Option<&Permutation>, detail: impl Into<String>) -> Failure {
    Failure {
        lambda: lambda.clone(),
        j: j.map(|p| p.simple_roots().to_vec()),
        witness: witness.cloned(),
        detail: detail.into(),
    }
}

fn check_degree(n: usize) -> Result<()> {
    if !(1..=MAX_HARNESS_DEGREE).contains(&n) {
        return Err(Error::DegreeOutOfRange(n));
    }
    Ok(())
}

/// All `(λ, J)` pairs of degree `n` in canonical order.
pub fn pairs(n: usize) -> Vec<(Partition, ParabolicData)> {
    Partition::all(n)
        .into_iter()
        .flat_map(|lambda| ParabolicData::all(n).map(move |p| (lambda.clone(), p)))
        .collect()
}

/// Runs each check for every degree `1..=n_max`; one report per check
/// and degree.
pub fn run_checks(n_max: usize, checks: &[CheckId]) -> Result<Vec<CheckReport>> {
    check_degree(n_max)?;
    let mut reports = Vec::new();
    for &check in checks {
        for n in 1..=n_max {
            let start = Instant::now();
            let tally = run_check(check, n);
            reports.push(CheckReport {
                check_id: check.as_str().to_string(),
                n,
                cases_run: tally.cases,
                failures: tally.failures,
                out_of_hypothesis: tally.informational,
                elapsed_secs: start.elapsed().as_secs_f64(),
            });
        }
    }
    Ok(reports)
}

fn run_check(check: CheckId, n: usize) -> Tally {
    match check {
        CheckId::FixedPoints => over_pairs(n, fixed_points),
        CheckId::ParabolicDimension => over_pairs(n, parabolic_dimension),
        CheckId::PoincareCorollary => over_pairs(n, poincare_corollary),
        CheckId::SchubertCoset => over_pairs(n, schubert_coset),
        CheckId::MainTheorem => over_pairs(n, main_theorem),
        CheckId::SchubertIdeal => over_pairs(n, schubert_ideal_within_coset_reps)
            .merge(over_partitions(n, springer_schubert_points)),
        CheckId::StringsCoset => ParabolicData::all(n)
            .collect::<Vec<_>>()
            .par_iter()
            .map(strings_coset)
            .reduce(Tally::default, Tally::merge),
        CheckId::PhiVEquivalence => over_partitions(n, phi_v_equivalence),
        CheckId::DimFormulasAgree => over_partitions(n, dim_formulas_agree),
    }
}

fn over_pairs(n: usize, f: impl Fn(&ParabolicHessenbergVariety) -> Tally + Sync) -> Tally {
    pairs(n)
        .par_iter()
        .map(|(lambda, p)| {
            let variety = ParabolicHessenbergVariety::new(lambda, p).expect("degrees agree");
            f(&variety)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

fn over_partitions(n: usize, f: impl Fn(&Nilpotent) -> Tally + Sync) -> Tally {
    Partition::all(n)
        .par_iter()
        .map(|lambda| f(&Nilpotent::new(lambda)))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

fn fixed_points(x: &ParabolicHessenbergVariety) -> Tally {
    let mut t = Tally::default();
    let (lambda, p) = (&x.nilpotent().partition, x.parabolic());
    for w in enumerate_sn(p.degree()) {
        t.cases += 1;
        let (v, _) = p.coset_factor(&w).expect("degrees agree");
        let in_hess = x.variety().contains(&w).expect("degrees agree");
        let in_springer = x.nilpotent().springer_contains(&v).expect("degrees agree");
        if in_hess != in_springer {
            t.fail(lambda, Some(p), Some(&w), format!("wB in B(X,p_J) is {in_hess} but vB in B^X is {in_springer} for v=[{v}]"));
        }
    }
    t
}

fn parabolic_dimension(x: &ParabolicHessenbergVariety) -> Tally {
    let mut t = Tally::default();
    let (lambda, p) = (&x.nilpotent().partition, x.parabolic());
    for (w, direct) in x.variety().cells() {
        t.cases += 1;
        match x.parabolic_cell_dim(&w) {
            Ok(d) if d == direct => {}
            Ok(d) => t.fail(lambda, Some(p), Some(&w), format!("direct dimension {direct}, parabolic formula {d}")),
            Err(e) => t.fail(lambda, Some(p), Some(&w), format!("parabolic formula failed: {e}")),
        }
    }
    t
}

fn poincare_corollary(x: &ParabolicHessenbergVariety) -> Tally {
    let mut t = Tally { cases: 1, ..Tally::default() };
    let direct = x.variety().poincare();
    let formula = x.poincare_formula();
    if direct != formula {
        t.fail(&x.nilpotent().partition, Some(x.parabolic()), None, format!("direct {direct} vs cell formula {formula}"));
    }
    t
}

fn strings_coset(p: &ParabolicData) -> Tally {
    let mut t = Tally::default();
    let lambda = Partition::column(p.degree());
    for w in enumerate_sn(p.degree()) {
        t.cases += 1;
        let direct = p.is_min_coset_rep(&w).expect("degrees agree");
        let by_strings = p.is_min_coset_rep_by_strings(&w).expect("degrees agree");
        if direct != by_strings {
            t.fail(&lambda, Some(p), Some(&w), format!("descent test {direct}, string test {by_strings}"));
        }
    }
    t
}

fn schubert_coset(x: &ParabolicHessenbergVariety) -> Tally {
    let mut t = Tally { cases: 1, ..Tally::default() };
    if let Some(w) = x.first_schubert_coset_violation() {
        t.fail(&x.nilpotent().partition, Some(x.parabolic()), Some(&w), "w in W^J and w_T in W^J disagree");
    }
    t
}

fn schubert_ideal_within_coset_reps(x: &ParabolicHessenbergVariety) -> Tally {
    let mut t = Tally { cases: 1, ..Tally::default() };
    let p = x.parabolic();
    let points: Vec<Permutation> = x
        .w_x_j()
        .iter()
        .map(|v| x.nilpotent().schubert_point(v).expect("v in Springer fiber").point)
        .collect();
    let ideal = is_lower_ideal_within(&points, p.degree(), |u| p.is_min_coset_rep_unchecked(u))
        .expect("degrees agree");
    if !ideal {
        t.hypothesis_fail(&x.nilpotent().partition, Some(p), None, "{v_T : v in W(X,J)} is not a lower ideal of W^J");
    }
    t
}

/// Length, injectivity and lower-ideal properties of `w ↦ w_T` on the
/// whole Springer fiber.
fn springer_schubert_points(x: &Nilpotent) -> Tally {
    let mut t = Tally::default();
    let lambda = &x.partition;
    let points = x.schubert_points();
    for sp in &points {
        t.cases += 1;
        let dim = x.springer_cell_dim(&sp.source).expect("source in Springer fiber");
        if sp.point.length() != dim {
            t.fail(lambda, None, Some(&sp.source), format!("ℓ(w_T) = {} but cell dimension {dim}", sp.point.length()));
        }
    }
    let distinct: BTreeSet<&Permutation> = points.iter().map(|sp| &sp.point).collect();
    if distinct.len() != points.len() {
        t.hypothesis_fail(lambda, None, None, format!("{} flags map to {} Schubert points", points.len(), distinct.len()));
    }
    let set: Vec<Permutation> = distinct.into_iter().cloned().collect();
    if !is_lower_ideal_within(&set, x.degree(), |_| true).expect("degrees agree") {
        t.hypothesis_fail(lambda, None, None, "Schubert points do not form a Bruhat lower ideal");
    }
    t
}

fn main_theorem(x: &ParabolicHessenbergVariety) -> Tally {
    let mut t = Tally { cases: 1, ..Tally::default() };
    let report = x.verify_main_theorem();
    if !report.equal {
        t.hypothesis_fail(
            &report.lambda,
            Some(x.parabolic()),
            None,
            format!("Hessenberg {} vs Schubert union {}", report.hessenberg_poly, report.schubert_union_poly),
        );
    }
    t
}

fn phi_v_equivalence(x: &Nilpotent) -> Tally {
    let mut t = Tally { cases: 1, ..Tally::default() };
    let lambda = &x.partition;
    let phi_x = highest_form_rootset(lambda);
    let closure = phi_v_closure(&phi_x);
    let filling = phi_v_filling(lambda);
    if closure != filling {
        t.fail(lambda, None, None, format!("closure {closure} vs filling {filling}"));
    }
    if !phi_x.is_disjoint(&filling) {
        t.fail(lambda, None, None, "Φ_X meets Φ(V)");
    }
    if !is_highest_form(&phi_x).unwrap_or(false) {
        t.fail(lambda, None, None, format!("Φ_X = {phi_x} is not in highest form"));
    }
    t
}

fn dim_formulas_agree(x: &Nilpotent) -> Tally {
    let mut t = Tally::default();
    let lambda = &x.partition;
    for w in enumerate_sn(x.degree()) {
        t.cases += 1;
        let by_tableau = x.springer_contains(&w).expect("degrees agree");
        let by_roots = x.springer_contains_by_roots(&w).expect("degrees agree");
        if by_tableau != by_roots {
            t.fail(lambda, None, Some(&w), format!("tableau test {by_tableau}, root test {by_roots}"));
            continue;
        }
        if by_tableau {
            let rows = x.springer_cell_dim_by_rows(&w).expect("in Springer fiber");
            let roots = x.springer_cell_dim_by_roots(&w).expect("in Springer fiber");
            if rows != roots {
                t.fail(lambda, None, Some(&w), format!("row inversions {rows}, root count {roots}"));
            }
        }
    }
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Granularity {
    Cells,
    Summaries,
}

impl FromStr for Granularity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cells" => Ok(Granularity::Cells),
            "summaries" => Ok(Granularity::Summaries),
            other => Err(Error::Parse(format!("unknown granularity {other:?}"))),
        }
    }
}

/// One nonempty cell `C_w ∩ 𝓑(X, 𝔭_J)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRow {
    pub lambda: Partition,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub w: Permutation,
    pub v: Permutation,
    pub y: Permutation,
    pub dim: usize,
    /// Whether `wB` itself lies in the Springer fiber.
    pub springer: bool,
    /// `v_T` for the `W^J` part `v` of `w`.
    pub schubert_point: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Census {
    Cells(Vec<CellRow>),
    Summaries(Vec<MainTheoremReport>),
}

pub fn census(n: usize, granularity: Granularity) -> Result<Census> {
    check_degree(n)?;
    let pairs = pairs(n);
    Ok(match granularity {
        Granularity::Summaries => Census::Summaries(
            pairs
                .par_iter()
                .map(|(lambda, p)| {
                    ParabolicHessenbergVariety::new(lambda, p)
                        .expect("degrees agree")
                        .verify_main_theorem()
                })
                .collect(),
        ),
        Granularity::Cells => Census::Cells(
            pairs
                .par_iter()
                .map(|(lambda, p)| cell_rows(lambda, p))
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect(),
        ),
    })
}

fn cell_rows(lambda: &Partition, p: &ParabolicData) -> Vec<CellRow> {
    let x = ParabolicHessenbergVariety::new(lambda, p).expect("degrees agree");
    x.cells()
        .into_iter()
        .map(|cell| {
            let springer = x.nilpotent().springer_contains(&cell.w).expect("degrees agree");
            let schubert_point = x
                .nilpotent()
                .schubert_point(&cell.v)
                .expect("v lies in the Springer fiber")
                .point;
            CellRow {
                lambda: lambda.clone(),
                j: p.simple_roots().to_vec(),
                w: cell.w,
                v: cell.v,
                y: cell.y,
                dim: cell.dim,
                springer,
                schubert_point,
            }
        })
        .collect()
}

pub const CELLS_CSV_HEADER: [&str; 8] = ["lambda", "J", "w", "v", "y", "dim", "springer", "schubert_point"];
pub const SUMMARIES_CSV_HEADER: [&str; 6] = [
    "lambda",
    "J",
    "hessenberg_poly",
    "schubert_union_poly",
    "equal",
    "in_hypothesis",
];

impl Census {
    pub fn len(&self) -> usize {
        match self {
            Census::Cells(rows) => rows.len(),
            Census::Summaries(rows) => rows.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Lists are comma-joined inside quoted fields.
    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(out);
        let io_err = |e: csv::Error| Error::Parse(format!("csv: {e}"));
        match self {
            Census::Cells(rows) => {
                wtr.write_record(CELLS_CSV_HEADER).map_err(io_err)?;
                for r in rows {
                    wtr.write_record([
                        r.lambda.to_string(),
                        format::join(&r.j),
                        r.w.to_string(),
                        r.v.to_string(),
                        r.y.to_string(),
                        r.dim.to_string(),
                        r.springer.to_string(),
                        r.schubert_point.to_string(),
                    ])
                    .map_err(io_err)?;
                }
            }
            Census::Summaries(rows) => {
                wtr.write_record(SUMMARIES_CSV_HEADER).map_err(io_err)?;
                for r in rows {
                    wtr.write_record([
                        r.lambda.to_string(),
                        format::join(&r.j),
                        format::join(&to_usize(r.hessenberg_poly.coeffs())),
                        format::join(&to_usize(r.schubert_union_poly.coeffs())),
                        r.equal.to_string(),
                        r.in_hypothesis.to_string(),
                    ])
                    .map_err(io_err)?;
                }
            }
        }
        wtr.flush().map_err(|e| Error::Parse(format!("csv: {e}")))
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Census::Cells(rows) => serde_json::to_value(rows),
            Census::Summaries(rows) => serde_json::to_value(rows),
        }
        .expect("census rows serialize")
    }
}

fn to_usize(c: &[u64]) -> Vec<usize> {
    c.iter().map(|&x| x as usize).collect()
}
