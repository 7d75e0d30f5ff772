//! Machine-readable results.
//!
//! Exact values are always strings: integers in decimal, rationals as
//! `numerator/denominator` in lowest terms.

use serde::{Deserialize, Serialize};

/// Outcome of one verification, with the number of cases it covered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            passed: true,
            detail: String::new(),
        }
    }

    /// Records one case; the first failure's description is kept.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.passed {
            self.passed = false;
            self.detail = describe();
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        if self.passed {
            self.detail = detail.into();
        }
        self
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// Top-level document emitted by the CLI under `--json`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub results: Vec<(String, String)>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub passed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            ..Default::default()
        }
    }

    pub fn input(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.inputs.push((key.into(), value.to_string()));
        self
    }

    pub fn result(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.results.push((key.into(), value.to_string()));
        self
    }

    pub fn checks(&mut self, checks: impl IntoIterator<Item = Check>) -> &mut Self {
        self.checks.extend(checks);
        self.passed = Some(all_passed(&self.checks));
        self
    }

    /// `false` only when some check failed.
    pub fn ok(&self) -> bool {
        self.passed.unwrap_or(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_kept() {
        let mut c = Check::new("x");
        c.record(true, || "a".into());
        c.record(false, || "b".into());
        c.record(false, || "c".into());
        assert!(!c.passed);
        assert_eq!(c.cases, 3);
        assert_eq!(c.detail, "b");
    }

    #[test]
    fn report_pass_flag_tracks_checks() {
        let mut r = Report::new("t");
        assert!(r.ok());
        let mut bad = Check::new("bad");
        bad.record(false, String::new);
        r.checks([Check::new("good"), bad]);
        assert_eq!(r.passed, Some(false));
    }
}
