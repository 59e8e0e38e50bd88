//! Machine-readable results for the verification suites.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One named check with any counterexamples found (graph6 strings plus a
/// short description).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub counterexamples: Vec<String>,
}

/// Result of a verification suite run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerifyReport { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, counterexamples: Vec<String>) {
        let status = if counterexamples.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        self.checks.push(Check { name: name.into(), status, counterexamples });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    /// Plain-text rendering, one line per check.
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let status = match check.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
            };
            out.push_str(&format!("[{status}] {}\n", check.name));
            for ce in &check.counterexamples {
                out.push_str(&format!("    counterexample: {ce}\n"));
            }
        }
        let summary = if self.passed() { "all checks passed" } else { "violations found" };
        out.push_str(&format!("suite {}: {summary}\n", self.suite));
        out
    }
}
