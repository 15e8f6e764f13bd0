//! The commutator-word language: terms, laws, and deciding laws over a finite
//! group by enumerating assignments.

mod eval;
mod parser;
mod term;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use eval::{evaluate, EvalError};
pub use parser::{parse_law, parse_term, ParseError, MAX_EXPONENT};
pub use term::Term;

use crate::group::FiniteGroup;
use crate::scan::{self, Parallelism};
use crate::verdict::Verdict;
use eval::Program;

/// An equation `lhs = rhs` quantified over its free variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Law {
    lhs: Term,
    rhs: Term,
    variables: Vec<String>,
}

impl Law {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        let mut variables = lhs.variables();
        rhs.collect_variables(&mut variables);
        Law { lhs, rhs, variables }
    }

    pub fn lhs(&self) -> &Term {
        &self.lhs
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }

    /// Union of both sides' variables, in first-appearance order.
    pub fn variables(&self) -> &[String] {
        &self.variables
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LawError {
    #[error("exhaustive check needs {needed} evaluations, budget is {budget}; use sampled mode")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("unknown law {name:?}; known laws: {known}")]
    UnknownBuiltin { name: String, known: String },
}

struct Compiled<'a> {
    group: &'a FiniteGroup,
    lhs: Program,
    rhs: Program,
    variables: Vec<&'a str>,
}

impl<'a> Compiled<'a> {
    fn new(group: &'a FiniteGroup, law: &'a Law) -> Self {
        let variables: Vec<&str> = law.variables.iter().map(String::as_str).collect();
        let lhs = Program::compile(&law.lhs, &variables).expect("law variables cover both sides");
        let rhs = Program::compile(&law.rhs, &variables).expect("law variables cover both sides");
        Compiled { group, lhs, rhs, variables }
    }

    #[inline]
    fn holds(&self, stack: &mut Vec<u32>, asg: &[u32]) -> bool {
        self.lhs.run(self.group, asg, stack) == self.rhs.run(self.group, asg, stack)
    }
}

/// A two-variable word compiled against the slots `a, b`.
pub(crate) struct CompiledWord(Program);

impl CompiledWord {
    pub(crate) fn new(word: &Term) -> Self {
        CompiledWord(Program::compile(word, &["a", "b"]).expect("word variables are a and b"))
    }

    #[inline]
    pub(crate) fn run(&self, group: &FiniteGroup, asg: &[u32], stack: &mut Vec<u32>) -> u32 {
        self.0.run(group, asg, stack)
    }
}

/// Checks `law` on every assignment in lexicographic order and returns the
/// smallest counterexample, if any.
pub fn check_law_exhaustive(group: &FiniteGroup, law: &Law, budget: u64) -> Result<Verdict, LawError> {
    check_law_exhaustive_with(group, law, budget, Parallelism::Auto)
}

pub fn check_law_exhaustive_with(
    group: &FiniteGroup,
    law: &Law,
    budget: u64,
    parallelism: Parallelism,
) -> Result<Verdict, LawError> {
    let n = group.order();
    let k = law.variables.len();
    match scan::assignment_count(n, k) {
        Some(total) if total <= budget => {}
        total => {
            let needed = match total {
                Some(t) => alloc::format!("{t}"),
                None => alloc::format!("{n}^{k}"),
            };
            return Err(LawError::BudgetExceeded { needed, budget });
        }
    }
    let compiled = Compiled::new(group, law);
    let failure = scan::first_failure(n, k, parallelism, Vec::new, |stack, asg| compiled.holds(stack, asg));
    Ok(Verdict::exhaustive(failure, n, k, &compiled.variables, group.names()))
}

/// Evaluates `count` seeded random assignments. A counterexample is definitive;
/// a pass is evidence only.
pub fn check_law_sampled(group: &FiniteGroup, law: &Law, count: u64, seed: u64) -> Verdict {
    let compiled = Compiled::new(group, law);
    let k = law.variables.len();
    let outcome =
        scan::sampled_failure(group.order(), k, count, seed, Vec::new(), |stack, asg| compiled.holds(stack, asg));
    Verdict::sampled(outcome, seed, &compiled.variables, group.names())
}

/// Named laws from the commutator calculus of double magmas.
pub const BUILTIN_LAWS: &[(&str, &str)] = &[
    ("3M_I", "[x,y;x,z] = 1"),
    ("3M_II", "[x,y;y,z] = 1"),
    ("3M_III", "[x,y;[x,z]^u] = 1"),
    ("L1", "[x,y,z;x,u] = 1"),
    ("L2", "[x,y;x,u,v] = 1"),
    ("L3", "[x,y,z;x,u,v] = 1"),
    ("CI", "[w,x;y,z] = [w,y;x,z]"),
    ("PAIR", "[w,x;y,z][w,y;x,z] = 1"),
    ("SQUARE", "[w,x;y,z]^2 = 1"),
    ("JACOBI", "[x,y,z][y,z,x][z,x,y] = 1"),
    ("ASSOC_COMM", "[x,y,z][y,z,x] = 1"),
    ("COMM_SQ", "[x,y]^2 = 1"),
    ("CLASS2", "[x,y,z] = 1"),
];

pub fn builtin_law(name: &str) -> Result<Law, LawError> {
    BUILTIN_LAWS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| parse_law(text).expect("builtin laws parse"))
        .ok_or_else(|| LawError::UnknownBuiltin {
            name: name.into(),
            known: BUILTIN_LAWS.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", "),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Permutation, DEFAULT_ORDER_BUDGET};
    use crate::scan::DEFAULT_EVALUATION_BUDGET;
    use crate::verdict::Status;
    use alloc::string::ToString;

    fn s4() -> FiniteGroup {
        let gens = ["(1 2)", "(1 2 3 4)"].map(|s| Permutation::parse_cycles(s).unwrap());
        FiniteGroup::from_permutations(&gens, DEFAULT_ORDER_BUDGET).unwrap()
    }

    #[test]
    fn builtins_parse() {
        for (name, _) in BUILTIN_LAWS {
            builtin_law(name).unwrap();
        }
        let jacobi = builtin_law("JACOBI").unwrap();
        assert_eq!(jacobi, parse_law("[x,y,z][y,z,x][z,x,y]=1").unwrap());
        assert_eq!(builtin_law("CI").unwrap().variables(), ["w", "x", "y", "z"]);
        assert_eq!(builtin_law("L3").unwrap().variables(), ["x", "y", "z", "u", "v"]);
        let err = builtin_law("NOPE").unwrap_err();
        assert!(err.to_string().contains("3M_I, 3M_II"), "{err}");
    }

    #[test]
    fn metabelian_law_on_d8() {
        let d8 = FiniteGroup::dihedral(8).unwrap();
        let v = check_law_exhaustive(&d8, &builtin_law("3M_I").unwrap(), DEFAULT_EVALUATION_BUDGET).unwrap();
        assert_eq!(v.status, Status::HoldsExhaustive);
        assert_eq!(v.evaluations, 4096);
        assert!(v.witness.is_none());
    }

    #[test]
    fn metabelian_law_fails_on_s4() {
        let g = s4();
        let law = builtin_law("3M_I").unwrap();
        let v = check_law_exhaustive(&g, &law, DEFAULT_EVALUATION_BUDGET).unwrap();
        assert_eq!(v.status, Status::Counterexample);
        let w = v.witness_indices().unwrap();
        // the witness is the first failure in lexicographic order
        let seq = check_law_exhaustive_with(&g, &law, DEFAULT_EVALUATION_BUDGET, Parallelism::Sequential).unwrap();
        assert_eq!(seq, v);
        let rank = scan::lex_rank(&w.iter().map(|e| e.index() as u32).collect::<Vec<_>>(), 24);
        assert_eq!(v.evaluations, rank + 1);

        let sampled = check_law_sampled(&g, &law, 100_000, 7);
        assert_eq!(sampled.status, Status::Counterexample);
    }

    #[test]
    fn trivial_law_holds_everywhere() {
        let law = parse_law("x = x").unwrap();
        let g = s4();
        assert!(check_law_exhaustive(&g, &law, 100).unwrap().holds());
        let v = check_law_sampled(&g, &law, 50, 3);
        assert_eq!(v.status, Status::HoldsSampled { count: 50, seed: 3 });
    }

    #[test]
    fn heisenberg_weight_four_commutators_vanish() {
        let h = FiniteGroup::heisenberg(3).unwrap();
        let law = parse_law("[w,x;y,z] = 1").unwrap();
        assert_eq!(check_law_sampled(&h, &law, 10_000, 1).status, Status::HoldsSampled { count: 10_000, seed: 1 });
        let v = check_law_exhaustive(&h, &law, DEFAULT_EVALUATION_BUDGET).unwrap();
        assert_eq!(v.status, Status::HoldsExhaustive);
        assert_eq!(v.evaluations, 531_441);
    }

    #[test]
    fn budget_is_enforced() {
        let g = s4();
        let err = check_law_exhaustive(&g, &builtin_law("CI").unwrap(), 1000).unwrap_err();
        assert_eq!(err, LawError::BudgetExceeded { needed: "331776".into(), budget: 1000 });
    }

    #[test]
    fn comm_sq_matches_direct_computation() {
        let law = builtin_law("COMM_SQ").unwrap();
        for g in [FiniteGroup::dihedral(3).unwrap(), FiniteGroup::dihedral(4).unwrap(), s4()] {
            let direct = g.elements().all(|x| {
                g.elements().all(|y| {
                    let c = g.commutator(x, y);
                    g.mul(c, c) == g.identity()
                })
            });
            assert_eq!(check_law_exhaustive(&g, &law, DEFAULT_EVALUATION_BUDGET).unwrap().holds(), direct);
        }
    }
}
