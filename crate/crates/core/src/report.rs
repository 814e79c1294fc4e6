//! Uniform pass/fail records produced by every verification suite.

use serde::Serialize;

/// One named check with an optional witness explaining a failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// An ordered list of checks belonging to one suite run on one object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub label: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>, label: impl Into<String>) -> Self {
        Report { suite: suite.into(), label: label.into(), checks: Vec::new() }
    }

    /// Records a check; the witness closure is only evaluated on failure.
    pub fn check(&mut self, id: impl Into<String>, passed: bool, witness: impl FnOnce() -> String) {
        let witness = if passed { None } else { Some(witness()) };
        self.checks.push(Check { id: id.into(), passed, witness });
    }

    /// Records a check that always carries a note (used for informational entries).
    pub fn note(&mut self, id: impl Into<String>, passed: bool, note: impl Into<String>) {
        self.checks.push(Check { id: id.into(), passed, witness: Some(note.into()) });
    }

    /// Appends all checks of another report, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = format!("{prefix}{}", c.id);
            self.checks.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}
