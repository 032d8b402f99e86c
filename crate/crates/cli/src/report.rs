//! Check results and run reports, with text and JSON rendering.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    /// Topic anchor for the check; the JSON key is part of the report schema.
    #[serde(rename = "paper_location")]
    pub location: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u64,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, location: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        let mut detail = detail.into();
        if !passed && detail.is_empty() {
            detail = "check failed".into();
        }
        Self {
            name: name.into(),
            location: location.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail,
            elapsed_ms: 0,
        }
    }

    pub fn skipped(name: impl Into<String>, location: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            location: location.into(),
            status: Status::Skipped,
            detail: detail.into(),
            elapsed_ms: 0,
        }
    }

    pub fn with_elapsed(mut self, ms: u64) -> Self {
        self.elapsed_ms = ms;
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub input: BTreeMap<String, String>,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    pub exit_code: i32,
}

impl RunReport {
    pub fn new(input: BTreeMap<String, String>, checks: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            input,
            checks,
            exit_code: i32::from(summary.fail > 0),
            summary,
        }
    }

    /// Copy with every `elapsed_ms` zeroed, for run-to-run comparison.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn report_emit(report: &RunReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(report).expect("report serializes");
            out.push(b'\n');
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                out.push_str(&format!(
                    "{} {} [{}] ({} ms) {}\n",
                    c.status,
                    c.name,
                    c.location,
                    c.elapsed_ms,
                    one_line(&c.detail)
                ));
            }
            let s = report.summary;
            out.push_str(&format!("summary: {} pass, {} fail, {} skipped\n", s.pass, s.fail, s.skipped));
            out.into_bytes()
        }
    }
}

fn one_line(s: &str) -> String {
    const MAX: usize = 160;
    let flat: String = s.split_whitespace().collect::<Vec<_>>().join(" ");
    if flat.chars().count() > MAX {
        let cut: String = flat.chars().take(MAX).collect();
        format!("{cut}...")
    } else {
        flat
    }
}
