//! Outcome records shared by every identity and congruence check.

use std::fmt;

use crate::arith::BigRat;

/// One failing instance: the inputs, and the exact values of both sides.
///
/// For congruences `lhs`/`rhs` hold the unreduced rationals; the residues (or
/// the reason reduction failed) go in `note`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub inputs: String,
    pub lhs: BigRat,
    pub rhs: BigRat,
    pub note: Option<String>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: lhs = {}, rhs = {}", self.inputs, self.lhs, self.rhs)?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// Result of checking an identity or congruence over one or more instances.
///
/// The check passes iff no counterexample was recorded.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    /// Human-readable description of the parameter ranges covered.
    pub swept: String,
    /// Number of instances evaluated.
    pub instances: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckReport {
    pub fn new(swept: impl Into<String>) -> Self {
        CheckReport {
            swept: swept.into(),
            instances: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Records one exact equality instance.
    pub fn record_eq(&mut self, inputs: impl FnOnce() -> String, lhs: BigRat, rhs: BigRat) {
        self.instances += 1;
        if lhs != rhs {
            self.counterexamples.push(Counterexample {
                inputs: inputs(),
                lhs,
                rhs,
                note: None,
            });
        }
    }

    /// Records one instance that holds iff `ok`.
    pub fn record(
        &mut self,
        ok: bool,
        inputs: impl FnOnce() -> String,
        lhs: BigRat,
        rhs: BigRat,
        note: impl FnOnce() -> Option<String>,
    ) {
        self.instances += 1;
        if !ok {
            self.counterexamples.push(Counterexample {
                inputs: inputs(),
                lhs,
                rhs,
                note: note(),
            });
        }
    }

    /// Folds another report's instances and failures into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.instances += other.instances;
        self.counterexamples.extend(other.counterexamples);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: {} instances, {} counterexamples",
            if self.pass() { "PASS" } else { "FAIL" },
            self.swept,
            self.instances,
            self.counterexamples.len()
        )
    }
}
