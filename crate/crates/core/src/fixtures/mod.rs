//! Scripted end-to-end reproductions of worked braid monodromy computations.
//!
//! Each pipeline starts from a literal factorization, applies lifts, conjugations, Hurwitz
//! sequences and generification rules recorded as data, and checks the intermediate and final
//! lists. Hard checks abort the run with a [`Error::Mismatch`]; soft checks only record a diff.

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::oracle::braids_equal;
use crate::par::{self, Exec};

mod arrangements;
mod nodal;
mod sextics;
mod smooth;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Hard,
    Soft,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub severity: Severity,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// Outcome of a pipeline run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub steps: Vec<String>,
    pub checks: Vec<Check>,
    /// Named intermediate and final factorizations, in order of production.
    pub outputs: Vec<(String, Factorization)>,
}

impl Report {
    pub fn output(&self, name: &str) -> Option<&Factorization> {
        self.outputs.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    /// The last factorization produced.
    pub fn final_output(&self) -> Option<&Factorization> {
        self.outputs.last().map(|(_, f)| f)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn soft_failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.severity == Severity::Soft && !c.passed)
    }
}

/// Recorder used by pipeline bodies.
pub(crate) struct Run {
    report: Report,
    exec: Exec,
}

impl Run {
    fn new(name: &str, exec: Exec) -> Self {
        Run {
            report: Report { name: name.to_string(), steps: Vec::new(), checks: Vec::new(), outputs: Vec::new() },
            exec,
        }
    }

    pub(crate) fn step(&mut self, text: impl Into<String>) {
        self.report.steps.push(text.into());
    }

    pub(crate) fn output(&mut self, name: &str, f: &Factorization) {
        self.report.outputs.push((name.to_string(), f.clone()));
    }

    fn record(&mut self, name: &str, severity: Severity, passed: bool, detail: String) -> Result<()> {
        self.report.checks.push(Check { name: name.to_string(), severity, passed, detail: detail.clone() });
        if !passed && severity == Severity::Hard {
            return Err(Error::mismatch(format!("{}: {name}: {detail}", self.report.name)));
        }
        Ok(())
    }

    fn diff(&self, got: &Factorization, expected: &Factorization) -> Result<(bool, String)> {
        if got.strands() != expected.strands() {
            return Ok((false, format!("strands {} vs {}", got.strands(), expected.strands())));
        }
        if got.len() != expected.len() {
            return Ok((false, format!("{} entries, expected {}", got.len(), expected.len())));
        }
        let bad = got.entrywise_mismatches(expected, self.exec)?;
        match bad.first() {
            None => Ok((true, String::new())),
            Some(&i) => Ok((
                false,
                format!(
                    "{} of {} entries differ; first at entry {i}: got {}, expected {}",
                    bad.len(),
                    got.len(),
                    got.entries()[i - 1],
                    expected.entries()[i - 1]
                ),
            )),
        }
    }

    /// Entrywise oracle comparison.
    pub(crate) fn expect_list(
        &mut self,
        name: &str,
        severity: Severity,
        got: &Factorization,
        expected: &Factorization,
    ) -> Result<()> {
        let (ok, detail) = self.diff(got, expected)?;
        self.record(name, severity, ok, detail)
    }

    pub(crate) fn expect_braid(&mut self, name: &str, got: &BraidWord, expected: &BraidWord) -> Result<()> {
        let ok = braids_equal(got, expected)?;
        let detail = if ok { String::new() } else { format!("got {got}, expected {expected}") };
        self.record(name, Severity::Hard, ok, detail)
    }

    pub(crate) fn expect(&mut self, name: &str, severity: Severity, ok: bool, detail: String) -> Result<()> {
        self.record(name, severity, ok, if ok { String::new() } else { detail })
    }

    /// Exponent-sum precheck followed by the full-twist oracle check.
    pub(crate) fn expect_generic(&mut self, name: &str, f: &Factorization) -> Result<()> {
        let d = f.strands() as i64;
        let e = f.total_exponent();
        self.expect(
            &format!("{name}: exponent sum"),
            Severity::Hard,
            e == d * (d - 1),
            format!("total exponent {e}, full twist on {d} strands has {}", d * (d - 1)),
        )?;
        let ok = f.is_generic()?;
        self.expect(
            &format!("{name}: product is the full twist"),
            Severity::Hard,
            ok,
            format!("pseudo-Coxeter element {} is not the full twist", f.pseudo_coxeter()),
        )
    }

    fn finish(self) -> Report {
        self.report
    }
}

pub(crate) fn parse_list(strands: usize, entries: &[&str]) -> Result<Factorization> {
    Factorization::parse(strands, false, entries)
}

type Body = fn(&mut Run) -> Result<()>;
type BoxedBody = Box<dyn Fn(&mut Run) -> Result<()>>;

const FIXED: &[(&str, Body)] = &[
    ("zariski-sextic", sextics::zariski),
    ("nine-cusp", sextics::nine_cusp),
    ("ceva9", arrangements::ceva9),
    ("nodal-cubic", nodal::nodal_cubic),
    ("dual-nodal-quartic", nodal::dual_nodal_quartic),
    ("hesse", arrangements::hesse),
    ("cubic-tangents", nodal::cubic_tangents),
];

/// Largest degree accepted by `smooth-<n>`.
pub const MAX_SMOOTH_DEGREE: usize = 8;

/// Registered pipeline names. `smooth-<n>` accepts any `2 <= n <= MAX_SMOOTH_DEGREE`.
pub fn names() -> Vec<String> {
    (2..=5).map(|n| format!("smooth-{n}")).chain(FIXED.iter().map(|(n, _)| n.to_string())).collect()
}

fn smooth_degree(name: &str) -> Option<Result<usize>> {
    let rest = name.strip_prefix("smooth-")?;
    Some(match rest.parse::<usize>() {
        Ok(n) if (2..=MAX_SMOOTH_DEGREE).contains(&n) => Ok(n),
        _ => Err(Error::invalid(format!(
            "smooth pipeline degree must be between 2 and {MAX_SMOOTH_DEGREE}, got {rest:?}"
        ))),
    })
}

/// A finished run: the report, plus the hard failure that stopped it, if any.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub error: Option<Error>,
}

impl Outcome {
    pub fn into_result(self) -> Result<Report> {
        match self.error {
            None => Ok(self.report),
            Some(e) => Err(e),
        }
    }
}

/// Run a pipeline; hard expectation failures become [`Error::Mismatch`].
pub fn run_pipeline(name: &str) -> Result<Report> {
    execute(name, Exec::Parallel)?.into_result()
}

/// Run a pipeline and keep the partial report when a hard check fails.
/// Only an unknown name is an immediate error.
pub fn execute(name: &str, exec: Exec) -> Result<Outcome> {
    let body: BoxedBody = match smooth_degree(name) {
        Some(n) => {
            let n = n?;
            Box::new(move |run| smooth::smooth(run, n))
        }
        None => {
            let body = FIXED
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, b)| *b)
                .ok_or_else(|| Error::invalid(format!("unknown pipeline {name:?}; known: {}", names().join(", "))))?;
            Box::new(body)
        }
    };
    let mut run = Run::new(name, exec);
    let error = body(&mut run).err();
    Ok(Outcome { report: run.finish(), error })
}

/// Run several pipelines independently.
pub fn run_many(names: &[String], exec: Exec) -> Vec<Result<Outcome>> {
    par::map(exec, names, |n| execute(n, Exec::Sequential))
}
