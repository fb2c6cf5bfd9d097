//! Pass/fail reports shared by every checker.

use serde::Serialize;

use crate::algebra::Variant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one exhaustive check over a window. A failing report carries
/// the first witness in scan order and both sides of the violated identity,
/// printed in expression syntax.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub variant: Variant,
    pub window: u32,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

impl CheckReport {
    pub fn pass(check: &str, variant: Variant, window: u32) -> Self {
        CheckReport {
            check: check.to_string(),
            variant,
            window,
            status: Status::Pass,
            witness: None,
            lhs: None,
            rhs: None,
        }
    }

    pub fn fail(
        check: &str,
        variant: Variant,
        window: u32,
        witness: impl Into<String>,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> Self {
        CheckReport {
            check: check.to_string(),
            variant,
            window,
            status: Status::Fail,
            witness: Some(witness.into()),
            lhs: Some(lhs.to_string()),
            rhs: Some(rhs.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Several checks run together, e.g. the algebra or bialgebra axioms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SuiteReport {
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn get(&self, check: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.check == check)
    }
}
