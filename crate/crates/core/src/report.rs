//! Check results and the JSON report emitted by `verify`.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub trials: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, trials: u64) -> Self {
        CheckResult { name: name.into(), status: Status::Pass, trials, witness: None }
    }

    pub fn fail(name: impl Into<String>, trials: u64, witness: impl Into<String>) -> Self {
        CheckResult { name: name.into(), status: Status::Fail, trials, witness: Some(witness.into()) }
    }

    /// Pass when `failure` is `None`.
    pub fn from_outcome(name: impl Into<String>, trials: u64, failure: Option<String>) -> Self {
        match failure {
            None => Self::pass(name, trials),
            Some(w) => Self::fail(name, trials, w),
        }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Report { suite: suite.into(), seed, checks, elapsed_ms: None }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}
