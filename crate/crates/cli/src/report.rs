//! Machine-readable command reports.

use homalg::{CheckReport, Error};
use serde::Serialize;
use serde_json::{Map, Value};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Serialize)]
pub struct WitnessEntry {
    pub identity: String,
    pub basis: Vec<String>,
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct CheckEntry {
    pub name: String,
    /// `hypothesis`, `conclusion` or `check`.
    pub role: &'static str,
    pub passed: bool,
    pub witness_count: usize,
    pub witnesses: Vec<WitnessEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl CheckEntry {
    pub fn from_report(report: &CheckReport, role: &'static str, labels: &[String], max_witnesses: usize) -> Self {
        let label = |i: usize| labels.get(i).cloned().unwrap_or_else(|| i.to_string());
        Self {
            name: report.name.clone(),
            role,
            passed: report.passed(),
            witness_count: report.witnesses().len(),
            witnesses: report
                .witnesses()
                .iter()
                .take(max_witnesses)
                .map(|w| WitnessEntry {
                    identity: w.identity.clone(),
                    basis: w.basis.iter().map(|&i| label(i)).collect(),
                    indices: w.basis.clone(),
                    lhs: w.lhs.iter().map(ToString::to_string).collect(),
                    rhs: w.rhs.iter().map(ToString::to_string).collect(),
                })
                .collect(),
            timing_ms: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub status: &'static str,
    pub exit_code: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
    pub checks: Vec<CheckEntry>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Self {
            tool: "homalg",
            version: env!("CARGO_PKG_VERSION"),
            command,
            status: "pass",
            exit_code: EXIT_PASS,
            error: None,
            details: Map::new(),
            checks: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Sets status and exit code from the recorded checks.
    pub fn conclude(&mut self) {
        if self.all_passed() {
            self.status = "pass";
            self.exit_code = EXIT_PASS;
        } else {
            self.status = "fail";
            self.exit_code = EXIT_FAIL;
        }
    }

    pub fn fail_with(&mut self, err: &Error, labels: &[String], max_witnesses: usize) {
        self.error = Some(err.to_string());
        if let Some(report) = err.report() {
            self.checks
                .push(CheckEntry::from_report(report, "check", labels, max_witnesses));
        }
        if is_input_error(err) {
            self.status = "error";
            self.exit_code = EXIT_INPUT;
        } else {
            self.status = "fail";
            self.exit_code = EXIT_FAIL;
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report is serializable");
        text.push('\n');
        text
    }
}

/// Errors that reject the input itself rather than a checked property.
pub fn is_input_error(err: &Error) -> bool {
    !matches!(
        err,
        Error::NotAssociative(_)
            | Error::NotMorphism { .. }
            | Error::NotWeightedRb(_)
            | Error::NotInvariant(_)
            | Error::NotYbPair(_)
            | Error::NotPseudotwistor(_)
            | Error::Postcondition(_)
    )
}
