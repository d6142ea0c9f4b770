//! Pass/fail reports with counterexample witnesses.
//!
//! Every checker in this crate produces a [`Report`]: one [`CheckResult`] per
//! axiom or identity, and on failure a [`Witness`] recording the basis
//! multi-index where the two sides first differ together with both values.
//! Witnesses make failing checks reproducible and directly testable.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::Scalar;

/// Where two structure-constant tensors first disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Codomain multi-index (basis positions, one per output leg).
    pub out_index: Vec<usize>,
    /// Domain multi-index (basis positions, one per input leg).
    pub in_index: Vec<usize>,
    /// Value of the left-hand side at that index.
    pub lhs: Scalar,
    /// Value of the right-hand side at that index.
    pub rhs: Scalar,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at out {:?} in {:?}: lhs = {}, rhs = {}",
            self.out_index, self.in_index, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(Witness),
}

impl CheckStatus {
    pub fn passed(&self) -> bool {
        matches!(self, CheckStatus::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            CheckStatus::Pass => None,
            CheckStatus::Fail(w) => Some(w),
        }
    }
}

/// A single named axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
}

/// An ordered list of axiom checks; the order is deterministic for a given
/// checker so serialized reports reproduce byte for byte.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new() -> Report {
        Report { checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, status: CheckStatus) {
        self.checks.push(CheckResult {
            name: name.into(),
            status,
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Namespaces every check of `other` under `prefix/`.
    pub fn merge_under(&mut self, prefix: &str, other: Report) {
        for mut check in other.checks {
            let mut name = String::from(prefix);
            name.push('/');
            name.push_str(&check.name);
            check.name = name;
            self.checks.push(check);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.status.passed())
    }

    /// The single check named `name`, if present.
    pub fn find(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match &check.status {
                CheckStatus::Pass => writeln!(f, "pass {}", check.name)?,
                CheckStatus::Fail(w) => writeln!(f, "FAIL {} ({w})", check.name)?,
            }
        }
        Ok(())
    }
}
