//! Pass/fail/skip records produced by validation and the identity suites.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn pass(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Fail,
            detail: detail.into(),
        }
    }

    pub fn skip(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Skip,
            detail: detail.into(),
        }
    }

    /// Pass when `counterexample` is `None`, otherwise fail with its description.
    pub fn from_search(id: impl Into<String>, ok_detail: impl Into<String>, counterexample: Option<String>) -> Self {
        match counterexample {
            None => Check::pass(id, ok_detail),
            Some(bad) => Check::fail(id, bad),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// True when no check failed (skips are neutral).
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| !c.is_fail())
}
