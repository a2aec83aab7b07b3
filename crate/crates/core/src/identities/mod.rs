//! Registry of closed-form identities, each checked as an LHS route against
//! an independent RHS route.
//!
//! Case ids read `family[params]`. Every family is listed in [`MANIFEST`]
//! with the suite it belongs to; a unit test keeps registry and manifest in
//! step.

mod checks;
mod registry;

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::numerics::QuadratureSpec;
use crate::{par, Error, Result};

pub use checks::{
    adamchik_difference, adamchik_printed_rhs, alternating_sum_check, corollary1_check, corollary1_values,
    loglog_closed_form, loglog_integral,
};
pub use registry::{registry, MANIFEST};

/// GOLD cases gate the run; VERIFY cases are reported only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseClass {
    Gold,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Suite {
    Core,
    Dirichlet,
    Fracpart,
    Integrals,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Core, Suite::Dirichlet, Suite::Fracpart, Suite::Integrals];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Dirichlet => "dirichlet",
            Suite::Fracpart => "fracpart",
            Suite::Integrals => "integrals",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// A suite name as accepted by [`run_suite`]: one suite or `all`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    One(Suite),
    All,
}

impl Selection {
    pub fn contains(self, suite: Suite) -> bool {
        match self {
            Selection::All => true,
            Selection::One(s) => s == suite,
        }
    }
}

impl FromStr for Selection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            Ok(Selection::All)
        } else {
            s.parse().map(Selection::One)
        }
    }
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    pub tol: f64,
    pub pass: bool,
    pub runtime_ms: f64,
    #[serde(skip)]
    pub class: CaseClass,
    /// Extra named values recorded alongside the comparison.
    #[serde(skip)]
    pub diagnostics: Vec<(String, f64)>,
    /// Set when a route failed; the values are then NaN.
    #[serde(skip)]
    pub error: Option<String>,
}

impl IdentityReport {
    pub fn new(id: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let abs_diff = (lhs - rhs).abs();
        IdentityReport {
            id: id.into(),
            lhs,
            rhs,
            abs_diff,
            tol,
            pass: abs_diff <= tol,
            runtime_ms: 0.0,
            class: CaseClass::Gold,
            diagnostics: Vec::new(),
            error: None,
        }
    }

    fn failed(id: impl Into<String>, tol: f64, err: &Error) -> Self {
        IdentityReport {
            pass: false,
            error: Some(err.to_string()),
            ..IdentityReport::new(id, f64::NAN, f64::NAN, tol)
        }
    }

    pub fn with_class(mut self, class: CaseClass) -> Self {
        self.class = class;
        self
    }

    pub fn with_diagnostic(mut self, name: impl Into<String>, value: f64) -> Self {
        self.diagnostics.push((name.into(), value));
        self
    }

    pub fn diagnostic(&self, name: &str) -> Option<f64> {
        self.diagnostics.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    pub fn is_gold_failure(&self) -> bool {
        self.class == CaseClass::Gold && !self.pass
    }

    fn set_tol(&mut self, tol: f64) {
        self.tol = tol;
        self.pass = self.abs_diff <= tol;
    }
}

type PairFn = dyn Fn(&QuadratureSpec) -> Result<(f64, f64)> + Send + Sync;
type ReportFn = dyn Fn(&QuadratureSpec) -> Result<IdentityReport> + Send + Sync;

enum Runner {
    Pair(Box<PairFn>),
    Report(Box<ReportFn>),
}

/// One registered identity: two routes and the tolerance they must meet.
pub struct IdentityCase {
    pub id: String,
    pub family: &'static str,
    pub suite: Suite,
    pub class: CaseClass,
    pub description: &'static str,
    pub lhs: String,
    pub rhs: String,
    /// `None` keeps the tolerance the check computes itself (Monte Carlo).
    pub tol: Option<f64>,
    runner: Runner,
}

impl fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("suite", &self.suite)
            .field("class", &self.class)
            .field("tol", &self.tol)
            .finish()
    }
}

impl IdentityCase {
    pub fn run(&self, spec: &QuadratureSpec) -> IdentityReport {
        let start = Instant::now();
        let tol = self.tol.unwrap_or(f64::NAN);
        let outcome = match &self.runner {
            Runner::Pair(f) => f(spec).map(|(l, r)| IdentityReport::new(self.id.clone(), l, r, tol)),
            Runner::Report(f) => f(spec),
        };
        let mut report = match outcome {
            Ok(mut r) => {
                if let Some(t) = self.tol {
                    r.set_tol(t);
                }
                r
            }
            Err(e) => IdentityReport::failed(self.id.clone(), tol, &e),
        };
        report.id = self.id.clone();
        report.class = self.class;
        report.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
        report
    }
}

/// Spec used by [`run_suite`]: the library default, 1e−13 absolute.
pub fn suite_spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

/// Cases of the named suite (`core`, `dirichlet`, `fracpart`, `integrals`
/// or `all`), sorted by id.
pub fn cases(name: &str) -> Result<Vec<IdentityCase>> {
    let sel: Selection = name.parse()?;
    let mut out: Vec<_> = registry().into_iter().filter(|c| sel.contains(c.suite)).collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

/// Runs every case of a suite on up to `parallelism` threads. Reports come
/// back sorted by id and do not depend on the thread count.
pub fn run_suite(name: &str, parallelism: usize) -> Result<Vec<IdentityReport>> {
    run_suite_with(name, parallelism, &suite_spec())
}

pub fn run_suite_with(name: &str, parallelism: usize, spec: &QuadratureSpec) -> Result<Vec<IdentityReport>> {
    let cases = cases(name)?;
    let threads = parallelism.max(1);
    Ok(par::with_threads(threads, || par::map(&cases, |c| c.run(spec))))
}

pub fn gold_failures(reports: &[IdentityReport]) -> Vec<&IdentityReport> {
    reports.iter().filter(|r| r.is_gold_failure()).collect()
}

pub fn write_json<W: Write>(reports: &[IdentityReport], mut w: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut w, reports).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(w).map_err(|e| Error::Io(e.to_string()))
}

pub fn write_csv<W: Write>(reports: &[IdentityReport], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for r in reports {
        out.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    out.flush().map_err(|e| Error::Io(e.to_string()))
}

/// One aligned line per report, then a summary line.
pub fn write_text<W: Write>(reports: &[IdentityReport], mut w: W) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(e.to_string());
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(0);
    for r in reports {
        let status = match (r.pass, r.class) {
            (true, _) => "pass",
            (false, CaseClass::Gold) => "FAIL",
            (false, CaseClass::Verify) => "diff",
        };
        let class = match r.class {
            CaseClass::Gold => "GOLD",
            CaseClass::Verify => "VERIFY",
        };
        write!(
            w,
            "{status} {class:<6} {:<width$}  lhs={:<22.15e} rhs={:<22.15e} diff={:.2e} tol={:.0e}",
            r.id, r.lhs, r.rhs, r.abs_diff, r.tol
        )
        .map_err(io)?;
        if r.runtime_ms > 0.0 {
            write!(w, " {:.1}ms", r.runtime_ms).map_err(io)?;
        }
        if let Some(e) = &r.error {
            write!(w, " error: {e}").map_err(io)?;
        }
        writeln!(w).map_err(io)?;
    }
    let gold = reports.iter().filter(|r| r.class == CaseClass::Gold).count();
    let failed = gold_failures(reports).len();
    let verify_diff = reports.iter().filter(|r| r.class == CaseClass::Verify && !r.pass).count();
    writeln!(
        w,
        "{} cases, {gold} gold, {failed} gold failures, {verify_diff} verify mismatches",
        reports.len()
    )
    .map_err(io)
}
