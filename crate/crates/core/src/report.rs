//! Itemized verification results.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

/// One instance of one identity, e.g. coassociativity at a given triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub diagram: String,
    pub at: Vec<String>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(diagram: &str, at: Vec<String>, passed: bool) -> Self {
        Check {
            diagram: diagram.to_string(),
            at,
            passed,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// A total list of checks in a fixed order; nothing is skipped on failure.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn record(&mut self, diagram: &str, at: Vec<String>, passed: bool) {
        self.checks.push(Check::new(diagram, at, passed));
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failing_diagrams(&self) -> BTreeSet<&str> {
        self.failures().map(|c| c.diagram.as_str()).collect()
    }

    /// Checks for one diagram, in report order.
    pub fn diagram(&self, name: &str) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.diagram == name).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.subject);
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            let at = if c.at.is_empty() {
                String::new()
            } else {
                format!(" ({})", c.at.join(", "))
            };
            let _ = write!(out, "  {status} {}{at}", c.diagram);
            if let Some(d) = &c.detail {
                let _ = write!(out, ": {d}");
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }
}
