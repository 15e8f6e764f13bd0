//! Magmas and double magmas as bare operation tables.
//!
//! Nothing here knows where a table came from; predicates are decided by
//! scanning the cells.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::group::Elem;
use crate::scan::{self, Parallelism};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MagmaError {
    #[error("table has {cells} cells for {order} elements")]
    Shape { order: usize, cells: usize },
    #[error("table entry {0} is out of range")]
    EntryOutOfRange(u32),
    #[error("the two operations are defined on different carriers")]
    CarrierMismatch,
    #[error("a magma needs a nonempty carrier")]
    Empty,
    #[error("interchange scan needs {needed} checks, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
}

/// A set with one binary operation and no assumed axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Magma {
    names: Vec<String>,
    op: Vec<u32>,
}

impl Magma {
    pub fn new(names: Vec<String>, op: Vec<u32>) -> Result<Self, MagmaError> {
        let n = names.len();
        if n == 0 {
            return Err(MagmaError::Empty);
        }
        if op.len() != n * n {
            return Err(MagmaError::Shape { order: n, cells: op.len() });
        }
        if let Some(&v) = op.iter().find(|&&v| v as usize >= n) {
            return Err(MagmaError::EntryOutOfRange(v));
        }
        Ok(Magma { names, op })
    }

    /// Fills the table cell by cell from `f(x, y)`.
    pub fn from_fn(names: Vec<String>, mut f: impl FnMut(Elem, Elem) -> Elem) -> Result<Self, MagmaError> {
        let n = names.len();
        let mut op = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                op.push(f(Elem::new(x), Elem::new(y)).raw());
            }
        }
        Magma::new(names, op)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Row-major cells.
    pub fn table(&self) -> &[u32] {
        &self.op
    }

    #[inline]
    pub fn op(&self, x: Elem, y: Elem) -> Elem {
        Elem::new(self.op_raw(x.raw(), y.raw()) as usize)
    }

    #[inline]
    fn op_raw(&self, x: u32, y: u32) -> u32 {
        self.op[x as usize * self.order() + y as usize]
    }

    pub fn is_commutative(&self) -> Verdict {
        let n = self.order();
        let fail = scan::first_failure(
            n,
            2,
            Parallelism::Sequential,
            || (),
            |_, a| self.op_raw(a[0], a[1]) == self.op_raw(a[1], a[0]),
        );
        Verdict::exhaustive(fail, n, 2, &["x", "y"], &self.names)
    }

    pub fn is_associative(&self) -> Verdict {
        let n = self.order();
        let fail = scan::first_failure(
            n,
            3,
            Parallelism::Auto,
            || (),
            |_, a| self.op_raw(self.op_raw(a[0], a[1]), a[2]) == self.op_raw(a[0], self.op_raw(a[1], a[2])),
        );
        Verdict::exhaustive(fail, n, 3, &["x", "y", "z"], &self.names)
    }

    /// The two-sided identity, which is unique when it exists.
    pub fn find_identity(&self) -> Option<Elem> {
        let n = self.order() as u32;
        (0..n)
            .find(|&e| (0..n).all(|x| self.op_raw(e, x) == x && self.op_raw(x, e) == x))
            .map(|e| Elem::new(e as usize))
    }

    /// An absorbing element `z` with `z⋆x = x⋆z = z`.
    pub fn find_zero(&self) -> Option<Elem> {
        let n = self.order() as u32;
        (0..n)
            .find(|&z| (0..n).all(|x| self.op_raw(z, x) == z && self.op_raw(x, z) == z))
            .map(|z| Elem::new(z as usize))
    }
}

/// One carrier with two operations, `*` (star) and `•` (bullet).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleMagma {
    star: Magma,
    bullet: Magma,
}

impl DoubleMagma {
    pub fn new(star: Magma, bullet: Magma) -> Result<Self, MagmaError> {
        if star.names != bullet.names {
            return Err(MagmaError::CarrierMismatch);
        }
        Ok(DoubleMagma { star, bullet })
    }

    pub fn star(&self) -> &Magma {
        &self.star
    }

    pub fn bullet(&self) -> &Magma {
        &self.bullet
    }

    pub fn order(&self) -> usize {
        self.star.order()
    }

    pub fn names(&self) -> &[String] {
        self.star.names()
    }

    #[inline]
    fn interchange_holds(&self, a: &[u32]) -> bool {
        let (w, x, y, z) = (a[0], a[1], a[2], a[3]);
        let (s, b) = (&self.star, &self.bullet);
        b.op_raw(s.op_raw(w, x), s.op_raw(y, z)) == s.op_raw(b.op_raw(w, y), b.op_raw(x, z))
    }

    /// `(w*x)•(y*z) = (w•y)*(x•z)` over all quadruples, in lexicographic order.
    pub fn satisfies_interchange(&self, budget: u64) -> Result<Verdict, MagmaError> {
        self.satisfies_interchange_with(budget, Parallelism::Auto)
    }

    pub fn satisfies_interchange_with(&self, budget: u64, parallelism: Parallelism) -> Result<Verdict, MagmaError> {
        let n = self.order();
        match scan::assignment_count(n, 4) {
            Some(total) if total <= budget => {}
            total => {
                let needed = total.map_or_else(|| format!("{n}^4"), |t| format!("{t}"));
                return Err(MagmaError::BudgetExceeded { needed, budget });
            }
        }
        let fail = scan::first_failure(n, 4, parallelism, || (), |_, a| self.interchange_holds(a));
        Ok(Verdict::exhaustive(fail, n, 4, &["w", "x", "y", "z"], self.names()))
    }

    pub fn satisfies_interchange_sampled(&self, count: u64, seed: u64) -> Verdict {
        let out = scan::sampled_failure(self.order(), 4, count, seed, (), |_, a| self.interchange_holds(a));
        Verdict::sampled(out, seed, &["w", "x", "y", "z"], self.names())
    }

    /// The smallest cell `(x, y)` where the two operations differ; `None` means improper.
    pub fn proper_witness(&self) -> Option<(Elem, Elem)> {
        let n = self.order();
        self.star
            .op
            .iter()
            .zip(&self.bullet.op)
            .position(|(a, b)| a != b)
            .map(|cell| (Elem::new(cell / n), Elem::new(cell % n)))
    }

    pub fn is_proper(&self) -> bool {
        self.proper_witness().is_some()
    }

    /// Checks the conclusions of the Eckmann–Hilton argument whenever both
    /// operations are unital and interchange holds.
    pub fn eckmann_hilton_audit(&self, budget: u64) -> Result<EckmannHiltonReport, MagmaError> {
        let star_identity = self.star.find_identity();
        let bullet_identity = self.bullet.find_identity();
        let interchange = self.satisfies_interchange(budget)?;
        let hypotheses_hold = star_identity.is_some() && bullet_identity.is_some() && interchange.holds();
        let conclusions = hypotheses_hold.then(|| {
            let star_commutative = self.star.is_commutative().holds();
            let star_associative = self.star.is_associative().holds();
            EckmannHiltonConclusions {
                identities_coincide: star_identity == bullet_identity,
                operations_coincide: !self.is_proper(),
                commutative: star_commutative && self.bullet.is_commutative().holds(),
                associative: star_associative && self.bullet.is_associative().holds(),
            }
        });
        let inconsistent = conclusions.as_ref().is_some_and(|c| !c.all());
        Ok(EckmannHiltonReport {
            star_identity: star_identity.map(|e| self.names()[e.index()].clone()),
            bullet_identity: bullet_identity.map(|e| self.names()[e.index()].clone()),
            interchange,
            hypotheses_hold,
            conclusions,
            inconsistent,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EckmannHiltonConclusions {
    pub identities_coincide: bool,
    pub operations_coincide: bool,
    pub commutative: bool,
    pub associative: bool,
}

impl EckmannHiltonConclusions {
    pub fn all(&self) -> bool {
        self.identities_coincide && self.operations_coincide && self.commutative && self.associative
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EckmannHiltonReport {
    pub star_identity: Option<String>,
    pub bullet_identity: Option<String>,
    pub interchange: Verdict,
    pub hypotheses_hold: bool,
    /// Present only when the hypotheses hold.
    pub conclusions: Option<EckmannHiltonConclusions>,
    /// Hypotheses hold but a conclusion fails. The Eckmann–Hilton argument rules this out.
    pub inconsistent: bool,
}

/// The two-element double semigroup on `{a, b}` where `*` is meet with `a < b`
/// and `•` is constantly `a`.
pub fn two_element_fixture() -> DoubleMagma {
    let names = alloc::vec![String::from("a"), String::from("b")];
    let star = Magma::new(names.clone(), alloc::vec![0, 0, 0, 1]).expect("fixture");
    let bullet = Magma::new(names, alloc::vec![0, 0, 0, 0]).expect("fixture");
    DoubleMagma::new(star, bullet).expect("fixture")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scan::DEFAULT_EVALUATION_BUDGET;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn fixture_predicates() {
        let d = two_element_fixture();
        // both printed tables are symmetric
        assert!(d.star().is_commutative().holds());
        assert!(d.bullet().is_commutative().holds());
        assert!(d.star().is_associative().holds());
        assert!(d.bullet().is_associative().holds());
        assert_eq!(d.star().find_identity(), Some(Elem::new(1)));
        assert_eq!(d.bullet().find_identity(), None);
        assert_eq!(d.bullet().find_zero(), Some(Elem::new(0)));
        assert!(d.satisfies_interchange(DEFAULT_EVALUATION_BUDGET).unwrap().holds());
        assert_eq!(d.proper_witness(), Some((Elem::new(1), Elem::new(1))));
    }

    #[test]
    fn fixture_audit_hypothesis_fails() {
        let report = two_element_fixture().eckmann_hilton_audit(DEFAULT_EVALUATION_BUDGET).unwrap();
        assert_eq!(report.star_identity.as_deref(), Some("b"));
        assert_eq!(report.bullet_identity, None);
        assert!(!report.hypotheses_hold);
        assert!(report.conclusions.is_none());
        assert!(!report.inconsistent);
    }

    #[test]
    fn improper_abelian_group_double_passes_audit() {
        let n = 6;
        let m = Magma::from_fn(names(n), |x, y| Elem::new((x.index() + y.index()) % n)).unwrap();
        let d = DoubleMagma::new(m.clone(), m).unwrap();
        assert!(d.satisfies_interchange(DEFAULT_EVALUATION_BUDGET).unwrap().holds());
        let report = d.eckmann_hilton_audit(DEFAULT_EVALUATION_BUDGET).unwrap();
        assert!(report.hypotheses_hold);
        assert!(report.conclusions.unwrap().all());
        assert!(!report.inconsistent);
    }

    #[test]
    fn noncommutative_witness_is_smallest_pair() {
        // x ⋆ y = x (left projection)
        let m = Magma::from_fn(names(3), |x, _| x).unwrap();
        let v = m.is_commutative();
        assert_eq!(v.witness_indices(), Some(alloc::vec![Elem::new(0), Elem::new(1)]));
        assert!(m.is_associative().holds());
        assert_eq!(m.find_identity(), None);
        assert_eq!(m.find_zero(), None);
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(Magma::new(names(2), alloc::vec![0, 1, 1]), Err(MagmaError::Shape { order: 2, cells: 3 }));
        assert_eq!(Magma::new(names(2), alloc::vec![0, 1, 1, 2]), Err(MagmaError::EntryOutOfRange(2)));
        assert_eq!(Magma::new(Vec::new(), Vec::new()), Err(MagmaError::Empty));
        let a = Magma::new(names(1), alloc::vec![0]).unwrap();
        let b = Magma::new(alloc::vec!["z".into()], alloc::vec![0]).unwrap();
        assert_eq!(DoubleMagma::new(a, b), Err(MagmaError::CarrierMismatch));
    }

    #[test]
    fn interchange_budget() {
        let d = two_element_fixture();
        assert!(matches!(d.satisfies_interchange(15), Err(MagmaError::BudgetExceeded { budget: 15, .. })));
        assert!(d.satisfies_interchange_sampled(100, 9).holds());
    }
}
