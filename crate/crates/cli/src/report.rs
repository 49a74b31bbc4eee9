//! Verification reports: a deterministic JSON document plus a human table.
//! Timing is deliberately kept out of the JSON so repeated runs with the
//! same configuration produce identical bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

pub const REPORT_SCHEMA: &str = "reflekt-report/1";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Serialize)]
pub struct Check {
    /// Unique per report: suite/check/key.
    pub name: String,
    /// What is being verified, in plain language.
    pub statement: String,
    pub key: String,
    pub status: Status,
    /// Evidence for pass/fail; the reason for skipped.
    pub details: String,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        statement: impl Into<String>,
        key: String,
        status: Status,
        details: impl Into<String>,
    ) -> Check {
        Check {
            name: name.into(),
            statement: statement.into(),
            key,
            status,
            details: details.into(),
        }
    }
}

#[derive(Serialize)]
pub struct Config {
    pub grid: Vec<String>,
    pub suites: Vec<String>,
    pub budget: u64,
}

#[derive(Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub version: &'static str,
    pub config: Config,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: Config, checks: Vec<Check>) -> Report {
        let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
        let summary = Summary {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            skipped: count(Status::Skipped),
        };
        Report {
            schema: REPORT_SCHEMA,
            version: env!("CARGO_PKG_VERSION"),
            config,
            checks,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        let mut body = serde_json::to_string_pretty(self).context("serializing report")?;
        body.push('\n');
        fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }

    /// Table for standard output. Skipped reasons are shown indented;
    /// passing details are elided to keep the table scannable.
    pub fn human(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for check in &self.checks {
            let mark = match check.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            let _ = writeln!(out, "{mark}  {:width$}  {}", check.name, match check.status {
                Status::Pass => "",
                _ => check.details.as_str(),
            });
            if check.status == Status::Fail {
                let _ = writeln!(out, "      {}", check.statement);
            }
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} skipped",
            self.summary.pass, self.summary.fail, self.summary.skipped
        );
        out
    }
}
