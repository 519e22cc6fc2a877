use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    pub fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Skipped,
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Results and checks of one demo or suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Outcome {
    pub results: Value,
    pub checks: Vec<Check>,
}

impl Outcome {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

/// Counts failures over `trials` runs and keeps the first failure message.
#[derive(Debug, Default)]
pub struct Tally {
    pub trials: usize,
    pub failures: usize,
    pub first: Option<String>,
}

impl Tally {
    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(detail());
            }
        }
    }

    pub fn check(&self, name: &str) -> Check {
        let mut detail = format!("{}/{} agree", self.trials - self.failures, self.trials);
        if let Some(f) = &self.first {
            detail.push_str(&format!("; first failure: {f}"));
        }
        Check::new(name, self.failures == 0 && self.trials > 0, detail)
    }
}
