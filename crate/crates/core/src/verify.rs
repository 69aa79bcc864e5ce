//! Verification reports shared by every composition law.

use std::fmt;

use serde::{Deserialize, Serialize};

/// One named condition of a composition law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// The outcome of checking an identity: every condition with its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub law: String,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Verification {
    pub fn new(law: &str) -> Self {
        Verification { law: law.to_string(), checks: Vec::new(), notes: Vec::new() }
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: Option<String>) {
        self.checks.push(Check { name: name.to_string(), passed, detail });
    }

    pub fn check_eq<T: PartialEq + fmt::Display>(&mut self, name: &str, left: &T, right: &T) {
        let ok = left == right;
        self.check(name, ok, (!ok).then(|| format!("{left} != {right}")));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn holds(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Appends another report's checks under a prefix.
    pub fn absorb(&mut self, prefix: &str, other: Verification) {
        for c in other.checks {
            self.checks.push(Check { name: format!("{prefix}: {}", c.name), ..c });
        }
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} law: {}", self.law, if self.holds() { "verified" } else { "FAILED" })?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "ok" } else { "fail" }, c.name)?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
