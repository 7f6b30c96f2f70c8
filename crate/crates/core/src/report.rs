//! Structured verdicts produced by every checker.

use crate::field::Scalar;

/// One violated instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Which identity of the checked system failed.
    pub identity: String,
    /// Basis indices the identity was evaluated on.
    pub basis: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

/// Verdict of one checker. Passes exactly when no witness was recorded.
///
/// Witnesses are grouped by identity in the order the checker evaluates
/// them and sorted lexicographically by basis tuple within a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    /// Records a witness when `lhs != rhs`. Returns whether they agreed.
    pub fn compare(&mut self, identity: &str, basis: &[usize], lhs: &[Scalar], rhs: &[Scalar]) -> bool {
        if lhs == rhs {
            return true;
        }
        self.witnesses.push(Witness {
            identity: identity.to_string(),
            basis: basis.to_vec(),
            lhs: lhs.to_vec(),
            rhs: rhs.to_vec(),
        });
        false
    }

    /// Appends the witnesses of `other`, prefixing their identity labels.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut w in other.witnesses {
            if !prefix.is_empty() {
                w.identity = format!("{prefix}: {}", w.identity);
            }
            self.witnesses.push(w);
        }
    }

    pub fn merge(name: impl Into<String>, parts: impl IntoIterator<Item = CheckReport>) -> Self {
        let mut out = Self::new(name);
        for part in parts {
            let prefix = part.name.clone();
            out.absorb(&prefix, part);
        }
        out
    }

    /// Converts a failing report into the given error.
    pub fn ok_or<E>(self, err: impl FnOnce(Box<CheckReport>) -> E) -> Result<(), E> {
        if self.passed() {
            Ok(())
        } else {
            Err(err(Box::new(self)))
        }
    }
}
