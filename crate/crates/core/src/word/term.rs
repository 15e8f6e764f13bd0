use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A group word after desugaring: every bracket is binary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    /// The literal `1`.
    One,
    Inverse(Box<Term>),
    Product(Box<Term>, Box<Term>),
    /// `t^k` for `k != -1`; `t^-1` parses to [`Term::Inverse`].
    Power(Box<Term>, i32),
    /// `base^by = by⁻¹ · base · by`.
    Conjugate {
        base: Box<Term>,
        by: Box<Term>,
    },
    /// `[u, v] = u⁻¹v⁻¹uv`.
    Bracket(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Self {
        Term::Var(name.into())
    }

    pub fn inverse(t: Term) -> Self {
        Term::Inverse(Box::new(t))
    }

    pub fn product(a: Term, b: Term) -> Self {
        Term::Product(Box::new(a), Box::new(b))
    }

    pub fn power(t: Term, k: i32) -> Self {
        Term::Power(Box::new(t), k)
    }

    pub fn conjugate(base: Term, by: Term) -> Self {
        Term::Conjugate { base: Box::new(base), by: Box::new(by) }
    }

    pub fn bracket(a: Term, b: Term) -> Self {
        Term::Bracket(Box::new(a), Box::new(b))
    }

    /// `[t1, t2, …, tn] = [[t1, …, t(n-1)], tn]`; a single term is returned as is.
    pub fn left_nest<I: IntoIterator<Item = Term>>(terms: I) -> Option<Self> {
        let mut it = terms.into_iter();
        let first = it.next()?;
        Some(it.fold(first, Term::bracket))
    }

    /// Free variables in order of first appearance.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_variables(&mut out);
        out
    }

    pub(crate) fn collect_variables(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::One => {}
            Term::Inverse(t) | Term::Power(t, _) => t.collect_variables(out),
            Term::Product(a, b) | Term::Bracket(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
            Term::Conjugate { base, by } => {
                base.collect_variables(out);
                by.collect_variables(out);
            }
        }
    }

    /// Writes `self` so that it re-parses as a primary expression.
    fn fmt_primary(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(_) | Term::Bracket(..) => write!(f, "{self}"),
            _ => write!(f, "({self})"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::One => f.write_str("1"),
            Term::Inverse(t) => {
                t.fmt_primary_or_one(f)?;
                f.write_str("^-1")
            }
            Term::Power(t, k) => {
                t.fmt_primary_or_one(f)?;
                write!(f, "^{k}")
            }
            Term::Conjugate { base, by } => {
                base.fmt_primary_or_one(f)?;
                f.write_str("^")?;
                // `x^1` would read as a power, so the identity conjugator gets parentheses.
                by.fmt_primary(f)
            }
            Term::Product(a, b) => {
                write!(f, "{a}*")?;
                match **b {
                    Term::Product(..) => write!(f, "({b})"),
                    _ => write!(f, "{b}"),
                }
            }
            Term::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

impl Term {
    fn fmt_primary_or_one(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::One => f.write_str("1"),
            _ => self.fmt_primary(f),
        }
    }
}
