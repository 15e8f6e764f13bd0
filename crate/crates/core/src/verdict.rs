//! Outcome of a universally quantified check.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::group::Elem;
use crate::scan;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Status {
    /// Every assignment was evaluated.
    HoldsExhaustive,
    /// No counterexample among `count` seeded samples; not a proof.
    HoldsSampled {
        count: u64,
        seed: u64,
    },
    Counterexample,
}

/// One variable of a witness assignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub variable: String,
    pub element: String,
    pub index: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    /// Present exactly when `status` is [`Status::Counterexample`].
    pub witness: Option<Vec<Binding>>,
    /// For exhaustive counterexamples this is the witness's lexicographic rank
    /// plus one, so it does not depend on how the scan was split.
    pub evaluations: u64,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        !matches!(self.status, Status::Counterexample)
    }

    pub fn is_exhaustive(&self) -> bool {
        !matches!(self.status, Status::HoldsSampled { .. })
    }

    /// Witness element indices in variable order.
    pub fn witness_indices(&self) -> Option<Vec<Elem>> {
        self.witness.as_ref().map(|w| w.iter().map(|b| b.index).collect())
    }

    pub(crate) fn exhaustive(
        failure: Option<Vec<u32>>,
        n: usize,
        arity: usize,
        variables: &[&str],
        names: &[String],
    ) -> Self {
        match failure {
            None => Verdict {
                status: Status::HoldsExhaustive,
                witness: None,
                evaluations: scan::assignment_count(n, arity).unwrap_or(u64::MAX),
            },
            Some(asg) => Verdict {
                status: Status::Counterexample,
                evaluations: scan::lex_rank(&asg, n) + 1,
                witness: Some(bindings(&asg, variables, names)),
            },
        }
    }

    pub(crate) fn sampled(
        (failure, evaluations): (Option<Vec<u32>>, u64),
        seed: u64,
        variables: &[&str],
        names: &[String],
    ) -> Self {
        match failure {
            None => Verdict { status: Status::HoldsSampled { count: evaluations, seed }, witness: None, evaluations },
            Some(asg) => {
                Verdict { status: Status::Counterexample, witness: Some(bindings(&asg, variables, names)), evaluations }
            }
        }
    }
}

fn bindings(asg: &[u32], variables: &[&str], names: &[String]) -> Vec<Binding> {
    variables
        .iter()
        .zip(asg)
        .map(|(v, &e)| Binding {
            variable: (*v).into(),
            element: names[e as usize].clone(),
            index: Elem::new(e as usize),
        })
        .collect()
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::HoldsExhaustive => write!(f, "holds (exhaustive, {} evaluations)", self.evaluations),
            Status::HoldsSampled { count, seed } => write!(f, "holds (sampled, {count} assignments, seed {seed})"),
            Status::Counterexample => {
                f.write_str("counterexample:")?;
                for b in self.witness.iter().flatten() {
                    write!(f, " {}={}", b.variable, b.element)?;
                }
                Ok(())
            }
        }
    }
}
