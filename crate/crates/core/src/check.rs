//! Shared vocabulary for check drivers: a four-valued status plus a named
//! outcome record. Drivers return lists of these; the CLI maps them onto
//! report entries, and the integration suites assert on them directly.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A precondition did not hold, so the assertion was not evaluated.
    Skip,
    /// The available certificate machinery cannot decide the question.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
            Status::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome {
            name: name.into(),
            status,
            detail: detail.into(),
        }
    }

    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome::new(name, Status::Pass, detail)
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome::new(name, Status::Fail, detail)
    }

    pub fn skip(name: impl Into<String>, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome::new(name, Status::Skip, detail)
    }

    /// Pass/fail from a boolean.
    pub fn expect(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome::new(name, if ok { Status::Pass } else { Status::Fail }, detail)
    }
}

/// True when no outcome in the list failed (skips and inconclusives count as
/// non-failures; callers that need stricter policies filter themselves).
pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.status != Status::Fail)
}
