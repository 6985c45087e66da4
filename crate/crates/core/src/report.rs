//! Exhaustive axiom reports shared by every verifier in the crate.

use std::fmt;

use serde::Serialize;

/// One failed instance of an axiom: which law, at which elements, and the two
/// sides that should have agreed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn push(
        &mut self,
        axiom: &'static str,
        witness: Vec<usize>,
        lhs: impl ToString,
        rhs: impl ToString,
    ) {
        self.violations.push(Violation {
            axiom,
            witness,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    /// Records a violation only when the two sides differ.
    pub fn check<T: PartialEq + ToString>(
        &mut self,
        axiom: &'static str,
        witness: &[usize],
        lhs: T,
        rhs: T,
    ) {
        if lhs != rhs {
            self.push(axiom, witness.to_vec(), lhs, rhs);
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
    }

    /// Violations tagged with `axiom`.
    pub fn of_axiom<'a>(&'a self, axiom: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }

    pub fn has_axiom(&self, axiom: &str) -> bool {
        self.of_axiom(axiom).next().is_some()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "no violations");
        }
        for v in &self.violations {
            writeln!(f, "{} at {:?}: {} != {}", v.axiom, v.witness, v.lhs, v.rhs)?;
        }
        Ok(())
    }
}
