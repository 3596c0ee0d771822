//! Pass/fail reports for the theorem verifications.
//!
//! Every failing check carries a witness showing both sides of the identity
//! that broke; passing checks carry none.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Check {
            name: name.into(),
            passed: false,
            witness: Some(Witness { lhs: lhs.to_string(), rhs: rhs.to_string() }),
        }
    }

    /// Pass when both sides agree, otherwise fail with the two sides as witness.
    pub fn equality<T: PartialEq + fmt::Display>(name: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        if lhs == rhs {
            Check::pass(name)
        } else {
            Check::fail(name, lhs, rhs)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport { checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{}: {}", check.name, if check.passed { "pass" } else { "fail" })?;
            if let Some(w) = &check.witness {
                writeln!(f, "  lhs: {}", w.lhs)?;
                writeln!(f, "  rhs: {}", w.rhs)?;
            }
        }
        Ok(())
    }
}
