use std::fmt;

use scatalan::positivity::{PositivityReport, Verdict};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One entry in a report bundle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub range: String,
    pub verdict: Verdict,
    pub counterexample: Option<Value>,
    pub millis: u64,
    /// Exploratory checks are reported but never decide the exit code.
    #[serde(skip, default = "asserted_default")]
    pub asserted: bool,
}

fn asserted_default() -> bool {
    true
}

impl Check {
    pub fn from_positivity(
        name: impl Into<String>,
        report: &PositivityReport,
        millis: u64,
    ) -> Self {
        let counterexample = report.first_violation.map(|at| {
            serde_json::json!({
                "property": report.property,
                "index": at,
                "witness": report.witness,
            })
        });
        Check {
            name: name.into(),
            range: report.range.clone(),
            verdict: report.verdict,
            counterexample,
            millis,
            asserted: true,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Everything one invocation checked.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportBundle {
    pub version: String,
    pub command: String,
    pub checks: Vec<Check>,
}

impl ReportBundle {
    pub fn new(command: impl Into<String>) -> Self {
        ReportBundle {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            checks: Vec::new(),
        }
    }

    /// True when every asserted check passed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().filter(|c| c.asserted).all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.asserted && !c.passed())
    }

    /// Zeroes timings so identical runs serialize identically.
    pub fn without_timings(mut self) -> Self {
        for c in &mut self.checks {
            c.millis = 0;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable") + "\n"
    }
}

impl fmt::Display for ReportBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (scatalan {})", self.command, self.version)?;
        for c in &self.checks {
            let tag = match (c.asserted, c.verdict) {
                (true, Verdict::Pass) => "PASS",
                (true, Verdict::Fail) => "FAIL",
                (false, Verdict::Pass) => "HOLDS",
                (false, Verdict::Fail) => "FAILS",
            };
            write!(f, "{tag:<5} {:<44} {} ({} ms)", c.name, c.range, c.millis)?;
            if let Some(cx) = &c.counterexample {
                write!(f, "\n      counterexample: {cx}")?;
            }
            writeln!(f)?;
        }
        let asserted = self.checks.iter().filter(|c| c.asserted).count();
        let passed = self
            .checks
            .iter()
            .filter(|c| c.asserted && c.passed())
            .count();
        write!(f, "{passed}/{asserted} asserted checks passed")?;
        let evidence = self.checks.len() - asserted;
        if evidence > 0 {
            write!(f, ", {evidence} exploratory")?;
        }
        writeln!(f)
    }
}
