//! Suite reports: one record per check, JSON and text renderings.
//!
//! Reports with the same suite, seed, and configuration are byte-identical
//! except for the timing fields.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use alg_core::check::{CheckOutcome, Status};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub anchor: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub actual: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub duration_ms: u64,
}

impl CheckRecord {
    pub fn from_outcome(outcome: &CheckOutcome, anchor: &str, duration_ms: u64) -> CheckRecord {
        CheckRecord {
            name: outcome.name.clone(),
            anchor: anchor.to_string(),
            status: outcome.status.to_string(),
            expected: None,
            actual: outcome.detail.clone(),
            witness: None,
            duration_ms,
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail.to_string()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub config: BTreeMap<String, String>,
    pub checks: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub inconclusive: usize,
}

impl Report {
    pub fn new(suite: &str, seed: u64, config: BTreeMap<String, String>) -> Report {
        Report {
            suite: suite.to_string(),
            seed,
            config,
            checks: Vec::new(),
            passed: 0,
            failed: 0,
            skipped: 0,
            inconclusive: 0,
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        match record.status.as_str() {
            "pass" => self.passed += 1,
            "fail" => self.failed += 1,
            "skip" => self.skipped += 1,
            _ => self.inconclusive += 1,
        }
        self.checks.push(record);
    }

    pub fn extend_outcomes(&mut self, outcomes: &[CheckOutcome], anchor: &str, duration_ms: u64) {
        for o in outcomes {
            self.push(CheckRecord::from_outcome(o, anchor, duration_ms));
        }
    }

    /// 0 when nothing failed, 1 otherwise.  Skips and inconclusive records do
    /// not fail a run; they are visible in the counts.
    pub fn exit_code(&self) -> i32 {
        if self.failed > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {} (seed {})\n", self.suite, self.seed));
        for c in &self.checks {
            out.push_str(&format!("  [{:>12}] {}", c.status, c.name));
            if !c.actual.is_empty() {
                out.push_str(&format!(": {}", c.actual));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!(" (witness {w})"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped, {} inconclusive\n",
            self.passed, self.failed, self.skipped, self.inconclusive
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counters_track_statuses() {
        let mut r = Report::new("demo", 1, BTreeMap::new());
        r.push(CheckRecord {
            name: "a".into(),
            anchor: "".into(),
            status: "pass".into(),
            expected: None,
            actual: "".into(),
            witness: None,
            duration_ms: 0,
        });
        r.push(CheckRecord {
            name: "b".into(),
            anchor: "".into(),
            status: "fail".into(),
            expected: Some("0".into()),
            actual: "1".into(),
            witness: None,
            duration_ms: 0,
        });
        r.push(CheckRecord {
            name: "c".into(),
            anchor: "".into(),
            status: "skip".into(),
            expected: None,
            actual: "".into(),
            witness: None,
            duration_ms: 0,
        });
        assert_eq!((r.passed, r.failed, r.skipped), (1, 1, 1));
        assert_eq!(r.exit_code(), 1);
        let text = r.render_text();
        assert!(text.contains("1 passed, 1 failed"));
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back.failed, 1);
    }

    #[test]
    fn skips_do_not_fail_a_run() {
        let mut r = Report::new("demo", 1, BTreeMap::new());
        r.push(CheckRecord {
            name: "only".into(),
            anchor: "".into(),
            status: "skip".into(),
            expected: None,
            actual: "hypotheses not met".into(),
            witness: None,
            duration_ms: 2,
        });
        assert_eq!(r.exit_code(), 0);
    }
}
