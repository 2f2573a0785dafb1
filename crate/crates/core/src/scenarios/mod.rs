//! Runnable reproductions: built-in geometries, one runner per theorem, the
//! obstruction arguments, the gluing-matrix search, and scenario files.
//!
//! Every runner returns a [`Report`]: a list of named checks comparing a
//! computed value with the closed form the argument predicts, plus the raw
//! artifacts (classes, matrices) that produced them. Reports serialize to
//! JSON and carry their own [`Source`], so a saved report can be re-run and
//! compared byte for byte.

pub mod file;
pub mod geometries;
pub mod montesinos;
pub mod obstructions;
pub mod sweeps;
pub mod theorems;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupring::Coefficients;

pub use file::{run_scenario, ScenarioFile};
pub use geometries::builtin_geometry;
pub use montesinos::{classify_gluing, montesinos_matrix_for, montesinos_parity, GluingMatrix, ManifoldTag};
pub use obstructions::obstruction_scenario;
pub use sweeps::run_sweep;
pub use theorems::{genus1_hd_dim, run_theorem};

/// Parameters shared by all runners; each runner reads the ones it needs
/// and rejects missing or out-of-range values.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k2: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l2: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    /// A free-group word for the bar, where a runner allows overriding it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holonomy: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", deserialize_with = "coefficient_map")]
    pub h: Option<BTreeMap<i64, i64>>,
    #[serde(skip_serializing_if = "Option::is_none", deserialize_with = "coefficient_map")]
    pub v: Option<BTreeMap<i64, i64>>,
    #[serde(skip_serializing_if = "Option::is_none", deserialize_with = "coefficient_map")]
    pub b: Option<BTreeMap<i64, i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<Coefficients>,
    /// Grid bound for sweeps.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max: Option<i64>,
}

/// Integer-keyed maps arrive with string keys when buffered inside a tagged
/// enum, so keys are read as strings and parsed.
fn coefficient_map<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Option<BTreeMap<i64, i64>>, D::Error> {
    let Some(raw) = Option::<BTreeMap<String, i64>>::deserialize(d)? else { return Ok(None) };
    raw.into_iter()
        .map(|(k, v)| k.trim().parse().map(|k| (k, v)).map_err(|_| serde::de::Error::custom(format!("invalid exponent {k:?}"))))
        .collect::<std::result::Result<_, _>>()
        .map(Some)
}

impl Params {
    pub fn summary(&self) -> String {
        let v = serde_json::to_value(self).expect("params serialize");
        let serde_json::Value::Object(map) = v else { return String::new() };
        map.iter()
            .map(|(k, v)| match v {
                serde_json::Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub(crate) fn require_k(&self) -> Result<i64> {
        self.k.ok_or_else(|| Error::InvalidParameter("parameter k is required".into()))
    }

    pub(crate) fn require_positive(&self, name: &str, v: Option<i64>) -> Result<i64> {
        let v = v.ok_or_else(|| Error::InvalidParameter(format!("parameter {name} is required")))?;
        if v < 1 {
            return Err(Error::Hypothesis(format!("{name} >= 1 required, got {v}")));
        }
        Ok(v)
    }
}

/// Lowercase with separators removed: `lessSimple`, `less-simple` and
/// `less_simple` all name the same runner.
pub fn canonical_name(s: &str) -> String {
    s.chars().filter(|c| c.is_alphanumeric()).flat_map(char::to_lowercase).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Theorem { name: String, params: Params },
    Obstruction { name: String, params: Params },
    Scenario { file: Box<ScenarioFile> },
    Sweep { sweep: String, params: Params },
}

/// One computed-versus-expected comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub computed: String,
    /// `None` when there is no closed form to compare against; such a check
    /// only records the computed value and always passes.
    pub expected: Option<String>,
    pub pass: bool,
}

impl Check {
    pub fn compare(name: &str, computed: impl ToString, expected: impl ToString) -> Self {
        let computed = computed.to_string();
        let expected = expected.to_string();
        Check { name: name.into(), pass: computed == expected, computed, expected: Some(expected) }
    }

    pub fn record(name: &str, computed: impl ToString) -> Self {
        Check { name: name.into(), computed: computed.to_string(), expected: None, pass: true }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub source: Source,
    pub title: String,
    pub checks: Vec<Check>,
    pub artifacts: BTreeMap<String, serde_json::Value>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(source: Source, title: impl Into<String>) -> Self {
        Report { source, title: title.into(), checks: Vec::new(), artifacts: BTreeMap::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn artifact(&mut self, name: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("artifact serializes");
        self.artifacts.insert(name.into(), v);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Re-executes the report's source.
    pub fn rerun(&self) -> Result<Report> {
        match &self.source {
            Source::Theorem { name, params } => run_theorem(name, params),
            Source::Obstruction { name, params } => obstruction_scenario(name, params),
            Source::Scenario { file } => run_scenario(file),
            Source::Sweep { sweep, params } => run_sweep(sweep, params),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Report> {
        serde_json::from_str(s).map_err(|e| Error::Parse { what: "report", input: e.to_string() })
    }

    /// Human-readable table: a header line, one line per check, then notes.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "== {} ==", self.title).unwrap();
        if self.checks.is_empty() && self.notes.is_empty() {
            return out;
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            match &c.expected {
                Some(e) => writeln!(out, "{verdict}  {:width$}  {}  (expected {e})", c.name, c.computed).unwrap(),
                None => writeln!(out, "{verdict}  {:width$}  {}", c.name, c.computed).unwrap(),
            }
        }
        for n in &self.notes {
            writeln!(out, "note: {n}").unwrap();
        }
        writeln!(out, "result: {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

/// A request for [`run_batch`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Request {
    pub name: String,
    pub params: Params,
}

/// Runs theorem or obstruction requests concurrently; results come back in
/// request order.
pub fn run_batch(requests: &[Request]) -> Vec<Result<Report>> {
    requests.par_iter().map(|r| run_named(&r.name, &r.params)).collect()
}

/// Theorem names first, then obstruction scenario names.
pub fn run_named(name: &str, params: &Params) -> Result<Report> {
    match run_theorem(name, params) {
        Err(Error::UnknownName(_)) => obstruction_scenario(name, params),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_names() {
        assert_eq!(canonical_name("lessSimple"), "lesssimple");
        assert_eq!(canonical_name("less-simple"), "lesssimple");
        assert_eq!(canonical_name("morsesimple-s3"), "morsesimples3");
    }

    #[test]
    fn params_summary_is_sorted_and_terse() {
        let p = Params { k: Some(2), l: Some(3), ..Params::default() };
        assert_eq!(p.summary(), "k=2 l=3");
    }

    #[test]
    fn empty_report_renders_header_only() {
        let r = Report::new(Source::Theorem { name: "x".into(), params: Params::default() }, "x");
        assert_eq!(r.render_table(), "== x ==\n");
    }
}
