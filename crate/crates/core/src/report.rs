//! Per-check verification records.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::table::{Element, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Vec<Element>>,
    pub detail: Option<String>,
    /// Wall time in microseconds; excluded from report equality in tests.
    pub elapsed_us: u64,
}

/// A named list of checks. The overall verdict is the conjunction of all of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Runs `check` and records its verdict and elapsed time.
    pub fn run(&mut self, name: &str, check: impl FnOnce() -> Verdict) -> bool {
        let start = Instant::now();
        let verdict = check();
        let elapsed_us = start.elapsed().as_micros() as u64;
        let passed = verdict.is_ok();
        self.checks.push(CheckRecord {
            name: name.to_string(),
            passed,
            witness: verdict.err(),
            detail: None,
            elapsed_us,
        });
        passed
    }

    pub fn record(&mut self, name: &str, verdict: Verdict) -> bool {
        self.run(name, || verdict)
    }

    pub fn record_bool(&mut self, name: &str, passed: bool, detail: Option<String>) -> bool {
        self.checks.push(CheckRecord {
            name: name.to_string(),
            passed,
            witness: None,
            detail,
            elapsed_us: 0,
        });
        passed
    }

    /// Attaches a detail string to the most recent check.
    pub fn with_detail(&mut self, detail: impl Into<String>) -> &mut Self {
        if let Some(last) = self.checks.last_mut() {
            last.detail = Some(detail.into());
        }
        self
    }

    pub fn get(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn check_passed(&self, name: &str) -> Option<bool> {
        self.get(name).map(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Appends every check of `other`, prefixing the names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    /// The same report with all timings zeroed, for byte-stable comparison.
    pub fn without_timings(&self) -> VerificationReport {
        let mut out = self.clone();
        for c in &mut out.checks {
            c.elapsed_us = 0;
        }
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.subject,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, "  witness {w:?}")?;
            }
            if let Some(d) = &c.detail {
                write!(f, "  ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_is_conjunction() {
        let mut r = VerificationReport::new("t");
        assert!(r.passed());
        r.record("a", Ok(()));
        assert!(r.passed());
        r.record("b", Err(vec![1, 2]));
        assert!(!r.passed());
        assert_eq!(r.get("b").unwrap().witness, Some(vec![1, 2]));
        assert_eq!(r.failures().count(), 1);
        let text = r.to_string();
        assert!(text.contains("[FAIL] b  witness [1, 2]"));
    }
}
