//! Suite result rendering: a human-readable text report and a stable
//! machine-readable JSON schema. Field names and ordering of the JSON
//! form are part of the interface and pinned by a golden-file test.

use serde::{Deserialize, Serialize};
use ydl_core::report::Witness;

use crate::suite::{CheckOutcome, CheckSuiteResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MachineReport {
    pub schema_version: u32,
    pub suite: String,
    pub algebra: String,
    pub field: String,
    pub dim: usize,
    pub overall: bool,
    pub checks: Vec<MachineCheck>,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MachineCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<MachineWitness>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MachineWitness {
    pub input: Option<String>,
    pub input_index: usize,
    /// Exact coefficient vectors as fraction strings.
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub lhs_pretty: String,
    pub rhs_pretty: String,
}

impl From<&Witness> for MachineWitness {
    fn from(w: &Witness) -> Self {
        MachineWitness {
            input: w.input.clone(),
            input_index: w.input_index,
            lhs: w.lhs.iter().map(|s| s.to_string()).collect(),
            rhs: w.rhs.iter().map(|s| s.to_string()).collect(),
            lhs_pretty: w.lhs_pretty.clone(),
            rhs_pretty: w.rhs_pretty.clone(),
        }
    }
}

impl From<&CheckOutcome> for MachineCheck {
    fn from(c: &CheckOutcome) -> Self {
        MachineCheck {
            name: c.name.clone(),
            passed: c.passed,
            detail: c.detail.clone(),
            witness: c.witness.as_ref().map(MachineWitness::from),
        }
    }
}

impl From<&CheckSuiteResult> for MachineReport {
    fn from(r: &CheckSuiteResult) -> Self {
        MachineReport {
            schema_version: SCHEMA_VERSION,
            suite: r.suite.clone(),
            algebra: r.algebra.clone(),
            field: r.field.clone(),
            dim: r.dim,
            overall: r.overall,
            checks: r.checks.iter().map(MachineCheck::from).collect(),
            wall_time_ms: r.wall_time_ms as u64,
        }
    }
}

pub fn render_machine(result: &CheckSuiteResult) -> String {
    let report = MachineReport::from(result);
    serde_json::to_string_pretty(&report).expect("report serializes")
}

pub fn render_text(result: &CheckSuiteResult) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "suite {} on {} (field {}, dim {})\n",
        result.suite, result.algebra, result.field, result.dim
    ));
    for check in &result.checks {
        let tag = if check.passed { "PASS" } else { "FAIL" };
        if check.detail.is_empty() {
            out.push_str(&format!("[{tag}] {}\n", check.name));
        } else {
            out.push_str(&format!("[{tag}] {} — {}\n", check.name, check.detail));
        }
    }
    let passed = result.checks.iter().filter(|c| c.passed).count();
    out.push_str(&format!(
        "{}: {passed}/{} checks passed in {} ms\n",
        if result.overall { "OK" } else { "FAILED" },
        result.checks.len(),
        result.wall_time_ms
    ));
    out
}
