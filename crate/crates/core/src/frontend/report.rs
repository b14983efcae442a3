use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use crate::theorems::{Status, Value};
use crate::theorems::LabeledCertificate;

/// Outcome of one session command (or of a failed declaration).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandResult {
    pub command: String,
    pub status: Status,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    /// Check inputs as displayed presentations.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inputs: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub certificate: Vec<LabeledCertificate>,
    pub assumptions: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped_reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Wall-clock time in microseconds; not covered by determinism.
    #[serde(default)]
    pub elapsed_us: u64,
}

impl CommandResult {
    pub(crate) fn error(command: String, error: impl ToString) -> Self {
        CommandResult {
            command,
            status: Status::Error,
            lhs: None,
            rhs: None,
            inputs: Vec::new(),
            certificate: Vec::new(),
            assumptions: Vec::new(),
            skipped_reason: None,
            error: Some(error.to_string()),
            elapsed_us: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub prime: u64,
    pub seed: u64,
    pub results: Vec<CommandResult>,
}

impl RunReport {
    /// True iff every result passed. Skipped checks do not count as passes.
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    /// The report with every timing field zeroed.
    pub fn without_timing(&self) -> RunReport {
        let mut r = self.clone();
        for c in &mut r.results {
            c.elapsed_us = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<RunReport> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "cmtensor {} (p = {}, seed = {})", self.version, self.prime, self.seed);
        for r in &self.results {
            let _ = write!(out, "[{}] {}", r.status.as_str(), r.command);
            match (&r.lhs, &r.rhs) {
                (Some(l), Some(rv)) => {
                    let _ = write!(out, ": {l} vs {rv}");
                }
                (Some(l), None) => {
                    let _ = write!(out, " = {l}");
                }
                _ => {}
            }
            let _ = writeln!(out, "  ({:.3} ms)", r.elapsed_us as f64 / 1000.0);
            for i in &r.inputs {
                let _ = writeln!(out, "    input: {i}");
            }
            if let Some(e) = &r.error {
                let _ = writeln!(out, "    error: {e}");
            }
            if let Some(s) = &r.skipped_reason {
                let _ = writeln!(out, "    skipped: {s}");
            }
            for a in &r.assumptions {
                let _ = writeln!(out, "    assumes: {a}");
            }
            for c in &r.certificate {
                let _ = writeln!(
                    out,
                    "    certificate {}: grade {} in {}, sequence [{}], witness {}",
                    c.label,
                    c.certificate.grade,
                    c.ideal,
                    c.certificate.sequence.join(", "),
                    c.certificate.witness
                );
            }
        }
        let passed = self.results.iter().filter(|r| r.status == Status::Pass).count();
        let _ = writeln!(out, "{passed}/{} passed", self.results.len());
        out
    }
}
