use std::fmt::Write as _;

use crate::scalar::Scalar;

/// One failed instance of an identity, evaluated on basis elements.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation<S> {
    pub axiom_id: String,
    pub basis_indices: Vec<usize>,
    /// LHS minus RHS. Never the zero vector.
    pub residual: Vec<S>,
}

/// Outcome of an axiom check. Lists every violation, not just the first.
#[derive(Debug, Clone, PartialEq)]
pub struct ViolationReport<S> {
    /// Axiom ids that were evaluated, in evaluation order.
    pub checked: Vec<String>,
    pub violations: Vec<Violation<S>>,
}

impl<S> Default for ViolationReport<S> {
    fn default() -> Self {
        Self {
            checked: Vec::new(),
            violations: Vec::new(),
        }
    }
}

impl<S: Scalar> ViolationReport<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn mark_checked(&mut self, axiom_id: &str) {
        if !self.checked.iter().any(|a| a == axiom_id) {
            self.checked.push(axiom_id.to_string());
        }
    }

    /// Records `residual` unless it vanishes.
    pub(crate) fn record(&mut self, axiom_id: &str, basis_indices: &[usize], residual: Vec<S>) {
        if residual.iter().any(|x| !x.is_zero()) {
            self.violations.push(Violation {
                axiom_id: axiom_id.to_string(),
                basis_indices: basis_indices.to_vec(),
                residual,
            });
        }
    }

    pub fn merge(&mut self, other: ViolationReport<S>) {
        for id in &other.checked {
            self.mark_checked(id);
        }
        self.violations.extend(other.violations);
    }

    /// One-line description naming the first failing tuple.
    pub fn summary(&self) -> String {
        match self.violations.first() {
            None => format!("ok ({} axioms checked)", self.checked.len()),
            Some(v) => {
                let mut s = format!(
                    "{} violation(s); first: {} at {:?}, residual [",
                    self.violations.len(),
                    v.axiom_id,
                    v.basis_indices
                );
                for (i, x) in v.residual.iter().enumerate() {
                    if i > 0 {
                        s.push_str(", ");
                    }
                    let _ = write!(s, "{x}");
                }
                s.push(']');
                s
            }
        }
    }

    pub(crate) fn into_precondition(self, context: &str) -> crate::Result<()> {
        if self.ok() {
            Ok(())
        } else {
            Err(crate::Error::Precondition {
                context: context.to_string(),
                detail: self.summary(),
            })
        }
    }
}
