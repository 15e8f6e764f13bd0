//! Double magmas built from groups and rings by commutation.

use alloc::string::String;
use alloc::vec::Vec;

use crate::group::{Elem, FiniteGroup};
use crate::magma::{DoubleMagma, Magma};
use crate::ring::FiniteRing;
use crate::word::{parse_term, ParseError, Term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("word may only use the variables a and b, found {0:?}")]
    ForeignVariable(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A two-variable word `W(a, b)`; it defines `x * y = W(x, y)` and `x • y = W(y, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordPair {
    word: Term,
}

impl WordPair {
    pub fn new(word: Term) -> Result<Self, ConstructionError> {
        if let Some(v) = word.variables().into_iter().find(|v| v != "a" && v != "b") {
            return Err(ConstructionError::ForeignVariable(v));
        }
        Ok(WordPair { word })
    }

    pub fn parse(text: &str) -> Result<Self, ConstructionError> {
        Self::new(parse_term(text)?)
    }

    /// `W(a, b) = [a, b]`.
    pub fn commutator() -> Self {
        WordPair { word: Term::bracket(Term::var("a"), Term::var("b")) }
    }

    pub fn word(&self) -> &Term {
        &self.word
    }
}

fn paired(
    names: &[String],
    star: impl FnMut(Elem, Elem) -> Elem,
    bullet: impl FnMut(Elem, Elem) -> Elem,
) -> DoubleMagma {
    let star = Magma::from_fn(names.to_vec(), star).expect("total table");
    let bullet = Magma::from_fn(names.to_vec(), bullet).expect("total table");
    DoubleMagma::new(star, bullet).expect("shared carrier")
}

/// `x * y = [x, y]` and `x • y = [y, x]`.
pub fn commutator_double(group: &FiniteGroup) -> DoubleMagma {
    paired(group.names(), |x, y| group.commutator(x, y), |x, y| group.commutator(y, x))
}

/// `x * y = W(x, y)` and `x • y = W(y, x)`.
pub fn word_double(group: &FiniteGroup, word: &WordPair) -> DoubleMagma {
    let program = crate::word::CompiledWord::new(&word.word);
    let mut stack = Vec::new();
    let n = group.order();
    let mut cells = Vec::with_capacity(n * n);
    for x in 0..n as u32 {
        for y in 0..n as u32 {
            cells.push(program.run(group, &[x, y], &mut stack));
        }
    }
    let at = |x: Elem, y: Elem| Elem::new(cells[x.index() * n + y.index()] as usize);
    paired(group.names(), at, |x, y| at(y, x))
}

/// `x * y = ⟨x, y⟩` and `x • y = ⟨y, x⟩`.
pub fn ring_commutator_double(ring: &FiniteRing) -> DoubleMagma {
    paired(ring.names(), |x, y| ring.lie_bracket(x, y), |x, y| ring.lie_bracket(y, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scan::DEFAULT_EVALUATION_BUDGET;

    fn cell(d: &Magma, names: &[&str], x: &str, y: &str) -> String {
        let pos = |s: &str| Elem::new(names.iter().position(|n| *n == s).unwrap());
        d.names()[d.op(pos(x), pos(y)).index()].clone()
    }

    #[test]
    fn c3_word_tables() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let d = word_double(&c3, &WordPair::parse("a*b^-1").unwrap());
        let names = ["1", "a", "a2"];
        let row = |m: &Magma, x| names.map(|y| cell(m, &names, x, y));
        assert_eq!(row(d.star(), "1"), ["1", "a2", "a"]);
        assert_eq!(row(d.star(), "a"), ["a", "1", "a2"]);
        assert_eq!(row(d.star(), "a2"), ["a2", "a", "1"]);
        assert_eq!(row(d.bullet(), "1"), ["1", "a", "a2"]);
        assert_eq!(row(d.bullet(), "a"), ["a2", "1", "a"]);
        assert_eq!(row(d.bullet(), "a2"), ["a", "a2", "1"]);
    }

    #[test]
    fn commutator_word_matches_construction() {
        for g in [FiniteGroup::dihedral(4).unwrap(), FiniteGroup::metacyclic(7, 3, 2).unwrap()] {
            assert_eq!(word_double(&g, &WordPair::commutator()), commutator_double(&g));
            assert_eq!(word_double(&g, &WordPair::parse("[a,b]").unwrap()), commutator_double(&g));
        }
    }

    #[test]
    fn trivial_group_double() {
        let d = commutator_double(&FiniteGroup::cyclic(1).unwrap());
        assert_eq!(d.star().table(), [0]);
        assert_eq!(d.bullet().table(), [0]);
    }

    #[test]
    fn difference_word_on_c4() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let d = word_double(&c4, &WordPair::parse("a b^-1").unwrap());
        assert!(d.satisfies_interchange(DEFAULT_EVALUATION_BUDGET).unwrap().holds());
        assert!(d.is_proper());
        assert!(!d.star().is_commutative().holds());
        assert!(!d.star().is_associative().holds());
    }

    #[test]
    fn foreign_variables_rejected() {
        assert_eq!(WordPair::parse("a*c"), Err(ConstructionError::ForeignVariable("c".into())));
        assert!(matches!(WordPair::parse("a*"), Err(ConstructionError::Parse(_))));
        // words in one variable, or none, are allowed
        assert!(WordPair::parse("b^2").is_ok());
        assert!(WordPair::parse("1").is_ok());
    }

    #[test]
    fn ring_doubles() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let d = ring_commutator_double(&z6);
        assert!(d.star().table().iter().all(|&v| v == 0));
        assert!(!d.is_proper());
        assert!(!ring_commutator_double(&FiniteRing::matrix_default(2, 2).unwrap()).is_proper());
        assert!(ring_commutator_double(&FiniteRing::matrix_default(2, 3).unwrap()).is_proper());
    }
}
