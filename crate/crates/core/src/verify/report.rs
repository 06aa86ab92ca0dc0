use std::fmt::{self, Write as _};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// A known misprint in the reference data: the arithmetic disagrees with
    /// the printed value in exactly the documented way.
    ExpectedDiscrepancy,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::ExpectedDiscrepancy => "ERRATUM",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Report {
        Report {
            name: name.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, label: impl Into<String>, verdict: Verdict, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            verdict,
            detail: detail.into(),
        });
    }

    /// Records a pass or a fail depending on `ok`.
    pub fn check(&mut self, label: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        self.push(label, verdict, detail);
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == verdict).count()
    }

    /// No unexpected failures. Expected discrepancies do not count against it.
    pub fn ok(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "{}: {}/{} passed",
            self.name,
            self.count(Verdict::Pass),
            self.checks.len()
        );
        let errata = self.count(Verdict::ExpectedDiscrepancy);
        if errata > 0 {
            write!(s, ", {errata} expected discrepanc{}", if errata == 1 { "y" } else { "ies" }).unwrap();
        }
        let failed = self.count(Verdict::Fail);
        if failed > 0 {
            write!(s, ", {failed} FAILED").unwrap();
        }
        s
    }

    /// One line per check followed by the summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            if c.detail.is_empty() {
                writeln!(out, "[{}] {}", c.verdict, c.label).unwrap();
            } else {
                writeln!(out, "[{}] {}: {}", c.verdict, c.label, c.detail).unwrap();
            }
        }
        writeln!(out, "{}", self.summary()).unwrap();
        out
    }
}
