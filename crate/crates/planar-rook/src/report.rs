//! Pass/fail reports for the verification suites, printable line by line.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ReportLine {
    pub label: String,
    pub passed: bool,
    pub detail: Option<String>,
}

/// An ordered list of named checks with outcomes.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub lines: Vec<ReportLine>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            lines: vec![],
        }
    }

    pub fn check(&mut self, label: impl Into<String>, passed: bool) {
        self.lines.push(ReportLine {
            label: label.into(),
            passed,
            detail: None,
        });
    }

    pub fn check_with(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.lines.push(ReportLine {
            label: label.into(),
            passed,
            detail: if passed { None } else { Some(detail.into()) },
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    /// Converts a failing report into `Error::CheckFailed` on its first
    /// failing line.
    pub fn require(self) -> Result<Report> {
        match self.lines.iter().find(|l| !l.passed) {
            Some(line) => Err(Error::CheckFailed(format!(
                "{}: {}{}",
                self.title,
                line.label,
                line.detail
                    .as_deref()
                    .map(|d| format!(" ({d})"))
                    .unwrap_or_default()
            ))),
            None => Ok(self),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for l in &self.lines {
            let status = if l.passed { "PASS" } else { "FAIL" };
            write!(f, "[{status}] {}", l.label)?;
            if let Some(d) = &l.detail {
                write!(f, "  -- {d}")?;
            }
            writeln!(f)?;
        }
        let overall = if self.all_passed() { "ok" } else { "FAILED" };
        write!(f, "result: {overall}")
    }
}
