//! Structure specification strings used by the CLI and corpus files.
//!
//! Groups: `cyclic:n`, `dihedral:m`, `metacyclic:m,n,r`, `heisenberg:p`,
//! `perm:(1 2),(1 2 3 4)` and `product:<spec>,<spec>`.
//! Rings: `zmod:n`, `matrix:k,n`, `uppertri:k,n`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::group::{FiniteGroup, GroupError, Permutation};
use crate::ring::{FiniteRing, RingError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("bad structure spec {spec:?} at position {position}: {message}")]
    Syntax { spec: String, position: usize, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Metacyclic { m: usize, n: usize, r: usize },
    Heisenberg(usize),
    Perm(Vec<Permutation>),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Zmod(usize),
    Matrix { k: usize, n: usize },
    UpperTri { k: usize, n: usize },
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, SpecError> {
        Err(SpecError::Syntax { spec: self.text.to_string(), position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(format!("expected {c:?}"))
        }
    }

    fn keyword(&mut self) -> Result<&'a str, SpecError> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(self.rest().len());
        if len == 0 {
            return self.fail("expected a structure kind");
        }
        let word = &self.rest()[..len];
        self.pos += len;
        self.expect(':')?;
        Ok(word)
    }

    fn number(&mut self) -> Result<usize, SpecError> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        if len == 0 {
            return self.fail("expected a number");
        }
        let value = self.rest()[..len].parse().or_else(|_| self.fail("number too large"))?;
        self.pos += len;
        Ok(value)
    }

    fn numbers<const N: usize>(&mut self) -> Result<[usize; N], SpecError> {
        let mut out = [0; N];
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 {
                self.expect(',')?;
            }
            *slot = self.number()?;
        }
        Ok(out)
    }

    fn at_end(&mut self) -> Result<(), SpecError> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            self.fail("unexpected trailing input")
        }
    }

    fn group(&mut self) -> Result<GroupSpec, SpecError> {
        let start = self.pos;
        let kind = self.keyword()?;
        Ok(match kind {
            "cyclic" => GroupSpec::Cyclic(self.number()?),
            "dihedral" => GroupSpec::Dihedral(self.number()?),
            "heisenberg" => GroupSpec::Heisenberg(self.number()?),
            "metacyclic" => {
                let [m, n, r] = self.numbers()?;
                GroupSpec::Metacyclic { m, n, r }
            }
            "perm" => GroupSpec::Perm(self.generators()?),
            "product" => {
                let left = self.group()?;
                self.expect(',')?;
                let right = self.group()?;
                GroupSpec::Product(Box::new(left), Box::new(right))
            }
            other => {
                self.pos = start;
                return self.fail(format!("unknown group kind {other:?}"));
            }
        })
    }

    /// Comma-separated cycle products; a comma only continues the list when a
    /// `(` follows it.
    fn generators(&mut self) -> Result<Vec<Permutation>, SpecError> {
        let mut gens = Vec::new();
        loop {
            self.skip_ws();
            if !self.rest().starts_with('(') {
                if gens.is_empty() {
                    return Ok(gens);
                }
                return self.fail("expected '('");
            }
            let start = self.pos;
            while self.rest().starts_with('(') {
                let Some(close) = self.rest().find(')') else {
                    return self.fail("unclosed cycle");
                };
                if self.rest()[1..close].contains('(') {
                    return self.fail("nested parentheses");
                }
                self.pos += close + 1;
                let after = self.rest().trim_start();
                if after.starts_with('(') {
                    self.skip_ws();
                }
            }
            let text = &self.text[start..self.pos];
            gens.push(Permutation::parse_cycles(text)?);
            self.skip_ws();
            if self.rest().starts_with(",") && self.rest()[1..].trim_start().starts_with('(') {
                self.pos += 1;
            } else {
                return Ok(gens);
            }
        }
    }
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let mut cur = Cursor { text, pos: 0 };
        let spec = cur.group()?;
        cur.at_end()?;
        Ok(spec)
    }

    /// Order of the described group, when it is known without building it.
    pub fn order_hint(&self) -> Option<u128> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n as u128),
            GroupSpec::Dihedral(m) => Some(2 * *m as u128),
            GroupSpec::Metacyclic { m, n, .. } => Some(*m as u128 * *n as u128),
            GroupSpec::Heisenberg(p) => (*p as u128).checked_pow(3),
            GroupSpec::Perm(_) => None,
            GroupSpec::Product(a, b) => a.order_hint()?.checked_mul(b.order_hint()?),
        }
    }

    /// Builds the group, refusing anything larger than `budget` elements.
    pub fn build(&self, budget: usize) -> Result<FiniteGroup, SpecError> {
        if let Some(order) = self.order_hint() {
            if order > budget as u128 {
                return Err(
                    GroupError::BudgetExceeded { budget, reached: order.min(usize::MAX as u128) as usize }.into()
                );
            }
        }
        Ok(match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n)?,
            GroupSpec::Dihedral(m) => FiniteGroup::dihedral(*m)?,
            GroupSpec::Metacyclic { m, n, r } => FiniteGroup::metacyclic(*m, *n, *r)?,
            GroupSpec::Heisenberg(p) => FiniteGroup::heisenberg(*p)?,
            GroupSpec::Perm(gens) => FiniteGroup::from_permutations(gens, budget)?,
            GroupSpec::Product(a, b) => FiniteGroup::direct_product(&a.build(budget)?, &b.build(budget)?, budget)?,
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(m) => write!(f, "dihedral:{m}"),
            GroupSpec::Metacyclic { m, n, r } => write!(f, "metacyclic:{m},{n},{r}"),
            GroupSpec::Heisenberg(p) => write!(f, "heisenberg:{p}"),
            GroupSpec::Perm(gens) => {
                f.write_str("perm:")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    match g.to_string().as_str() {
                        "1" => f.write_str("()")?,
                        s => f.write_str(s)?,
                    }
                }
                Ok(())
            }
            GroupSpec::Product(a, b) => write!(f, "product:{a},{b}"),
        }
    }
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let mut cur = Cursor { text, pos: 0 };
        let spec = match cur.keyword()? {
            "zmod" => RingSpec::Zmod(cur.number()?),
            "matrix" => {
                let [k, n] = cur.numbers()?;
                RingSpec::Matrix { k, n }
            }
            "uppertri" => {
                let [k, n] = cur.numbers()?;
                RingSpec::UpperTri { k, n }
            }
            other => {
                cur.pos = 0;
                return cur.fail(format!("unknown ring kind {other:?}"));
            }
        };
        cur.at_end()?;
        Ok(spec)
    }

    pub fn build(&self, budget: usize) -> Result<FiniteRing, SpecError> {
        Ok(match *self {
            RingSpec::Zmod(n) => {
                if n > budget {
                    return Err(RingError::BudgetExceeded { order: n.to_string(), budget }.into());
                }
                FiniteRing::zmod(n)?
            }
            RingSpec::Matrix { k, n } => FiniteRing::matrix(k, n, budget)?,
            RingSpec::UpperTri { k, n } => FiniteRing::upper_triangular(k, n, budget)?,
        })
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zmod(n) => write!(f, "zmod:{n}"),
            RingSpec::Matrix { k, n } => write!(f, "matrix:{k},{n}"),
            RingSpec::UpperTri { k, n } => write!(f, "uppertri:{k},{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_BUDGET;

    fn order(text: &str) -> usize {
        GroupSpec::parse(text).unwrap().build(DEFAULT_ORDER_BUDGET).unwrap().order()
    }

    #[test]
    fn group_specs() {
        assert_eq!(order("cyclic:5"), 5);
        assert_eq!(order("dihedral:8"), 16);
        assert_eq!(order("metacyclic:7,3,2"), 21);
        assert_eq!(order("heisenberg:3"), 27);
        assert_eq!(order("perm:(1 2),(1 2 3 4)"), 24);
        assert_eq!(order("perm:"), 1);
        assert_eq!(order("perm:(1 2 4 7)(3 6 8 5),(1 3 4 8)(2 5 7 6)"), 8);
        assert_eq!(order("product:cyclic:2,cyclic:2"), 4);
        assert_eq!(order("product:metacyclic:3,2,2,cyclic:2"), 12);
        assert_eq!(order("product:perm:(1 2),(2 3),product:cyclic:2,cyclic:3"), 36);
        assert_eq!(order(" dihedral: 3 "), 6);
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "cyclic:5",
            "metacyclic:7,3,2",
            "perm:(1 2),(1 2 3 4)",
            "product:product:perm:(1 2)(3 4),cyclic:2,dihedral:3",
        ] {
            let spec = GroupSpec::parse(text).unwrap();
            assert_eq!(spec.to_string(), text);
            assert_eq!(GroupSpec::parse(&spec.to_string()).unwrap(), spec);
        }
        assert_eq!(RingSpec::parse("matrix:2,3").unwrap().to_string(), "matrix:2,3");
    }

    #[test]
    fn bad_specs() {
        assert!(matches!(GroupSpec::parse("cyclic"), Err(SpecError::Syntax { .. })));
        assert!(matches!(GroupSpec::parse("cyclic:x"), Err(SpecError::Syntax { position: 7, .. })));
        assert!(matches!(GroupSpec::parse("torus:3"), Err(SpecError::Syntax { position: 0, .. })));
        assert!(matches!(GroupSpec::parse("cyclic:3,"), Err(SpecError::Syntax { .. })));
        assert!(matches!(GroupSpec::parse("perm:(1 1)"), Err(SpecError::Group(GroupError::MalformedPermutation(_)))));
        assert!(matches!(GroupSpec::parse("metacyclic:7,3"), Err(SpecError::Syntax { .. })));
        assert!(matches!(RingSpec::parse("field:4"), Err(SpecError::Syntax { .. })));
    }

    #[test]
    fn budgets() {
        let err = GroupSpec::parse("cyclic:2000").unwrap().build(DEFAULT_ORDER_BUDGET).unwrap_err();
        assert_eq!(err, SpecError::Group(GroupError::BudgetExceeded { budget: 1024, reached: 2000 }));
        assert!(GroupSpec::parse("perm:(1 2 3 4 5 6 7)").unwrap().build(4).is_err());
        assert!(GroupSpec::parse("cyclic:0").unwrap().build(10).is_err());
        assert!(RingSpec::parse("matrix:2,4").unwrap().build(DEFAULT_ORDER_BUDGET).is_ok());
        assert!(RingSpec::parse("matrix:2,7").unwrap().build(DEFAULT_ORDER_BUDGET).is_err());
    }
}
