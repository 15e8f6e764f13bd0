//! Finite rings (not necessarily unital) and the Lie commutator `⟨x, y⟩ = xy − yx`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::group::{Elem, DEFAULT_ORDER_BUDGET};
use crate::scan::{self, Parallelism};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("matrix dimension must be positive")]
    ZeroDimension,
    #[error("ring would have {order} elements, budget is {budget}")]
    BudgetExceeded { order: String, budget: usize },
    #[error("invalid ring tables: {0}")]
    InvalidTables(String),
    #[error("unknown ring law {name:?}; known laws: RCI, ALT3M, DOUBLE2, NILP2, PROPER_WITNESS")]
    UnknownLaw { name: String },
    #[error("{law} needs {needed} evaluations, budget is {budget}")]
    LawBudgetExceeded { law: RingLaw, needed: String, budget: u64 },
}

/// A finite ring with zero pinned at index 0.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    names: Vec<String>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing").field("order", &self.order).finish_non_exhaustive()
    }
}

impl FiniteRing {
    /// Validates the abelian group under `add`, associativity of `mul`, and
    /// both distributive laws.
    pub fn from_tables(add: Vec<u32>, mul: Vec<u32>, names: Vec<String>) -> Result<Self, RingError> {
        let n = names.len();
        let bad = |m: String| Err(RingError::InvalidTables(m));
        if n == 0 {
            return bad("empty carrier".into());
        }
        if add.len() != n * n || mul.len() != n * n {
            return bad(format!("tables must have {} cells", n * n));
        }
        if add.iter().chain(&mul).any(|&v| v as usize >= n) {
            return bad("entry out of range".into());
        }
        let a = |x: usize, y: usize| add[x * n + y] as usize;
        let m = |x: usize, y: usize| mul[x * n + y] as usize;
        let mut neg = Vec::with_capacity(n);
        for x in 0..n {
            if a(0, x) != x {
                return bad(format!("index 0 is not an additive identity at {x}"));
            }
            match (0..n).find(|&y| a(x, y) == 0) {
                Some(y) => neg.push(y as u32),
                None => return bad(format!("element {x} has no additive inverse")),
            }
            for y in 0..n {
                if a(x, y) != a(y, x) {
                    return bad(format!("addition is not commutative at ({x}, {y})"));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if a(a(x, y), z) != a(x, a(y, z)) {
                        return bad(format!("addition is not associative at ({x}, {y}, {z})"));
                    }
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return bad(format!("multiplication is not associative at ({x}, {y}, {z})"));
                    }
                    if m(x, a(y, z)) != a(m(x, y), m(x, z)) || m(a(x, y), z) != a(m(x, z), m(y, z)) {
                        return bad(format!("distributivity fails at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        Ok(FiniteRing { order: n, add, mul, neg, names })
    }

    /// Integers modulo `n`.
    pub fn zmod(n: usize) -> Result<Self, RingError> {
        if n == 0 {
            return Err(RingError::ZeroModulus);
        }
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                add.push(((x + y) % n) as u32);
                mul.push((x * y % n) as u32);
            }
        }
        Self::from_tables(add, mul, (0..n).map(|i| i.to_string()).collect())
    }

    /// All `k×k` matrices over `Z_n`.
    pub fn matrix(k: usize, n: usize, budget: usize) -> Result<Self, RingError> {
        let shape: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
        Self::matrices(k, n, &shape, budget)
    }

    /// Upper-triangular `k×k` matrices over `Z_n`.
    pub fn upper_triangular(k: usize, n: usize, budget: usize) -> Result<Self, RingError> {
        let shape: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
        Self::matrices(k, n, &shape, budget)
    }

    /// Matrices supported on `shape` (row-major positions). The element index
    /// reads the supported entries as base-`n` digits, most significant first.
    fn matrices(k: usize, n: usize, shape: &[(usize, usize)], budget: usize) -> Result<Self, RingError> {
        if n == 0 {
            return Err(RingError::ZeroModulus);
        }
        if k == 0 {
            return Err(RingError::ZeroDimension);
        }
        let order = match (n as u64).checked_pow(shape.len() as u32) {
            Some(o) if o <= budget as u64 => o as usize,
            Some(o) => return Err(RingError::BudgetExceeded { order: o.to_string(), budget }),
            None => return Err(RingError::BudgetExceeded { order: format!("{n}^{}", shape.len()), budget }),
        };
        let decode = |e: usize| -> Vec<usize> {
            let mut m = alloc::vec![0usize; k * k];
            let mut rest = e;
            for &(i, j) in shape.iter().rev() {
                m[i * k + j] = rest % n;
                rest /= n;
            }
            m
        };
        let encode = |m: &[usize]| -> u32 { shape.iter().fold(0usize, |acc, &(i, j)| acc * n + m[i * k + j]) as u32 };
        let mats: Vec<Vec<usize>> = (0..order).map(decode).collect();
        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        let mut buf = alloc::vec![0usize; k * k];
        for p in &mats {
            for q in &mats {
                for t in 0..k * k {
                    buf[t] = (p[t] + q[t]) % n;
                }
                add.push(encode(&buf));
                for i in 0..k {
                    for j in 0..k {
                        buf[i * k + j] = (0..k).map(|l| p[i * k + l] * q[l * k + j]).sum::<usize>() % n;
                    }
                }
                mul.push(encode(&buf));
            }
        }
        let names = mats
            .iter()
            .map(|m| {
                let rows: Vec<String> =
                    (0..k).map(|i| (0..k).map(|j| m[i * k + j].to_string()).collect::<Vec<_>>().join(",")).collect();
                format!("[{}]", rows.join(";"))
            })
            .collect();
        Self::from_tables(add, mul, names)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x.index()]
    }

    pub fn element_by_name(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name).map(Elem::new)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order).map(Elem::new)
    }

    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        Elem::new(self.add_raw(x.raw(), y.raw()) as usize)
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        Elem::new(self.mul[x.index() * self.order + y.index()] as usize)
    }

    pub fn neg(&self, x: Elem) -> Elem {
        Elem::new(self.neg[x.index()] as usize)
    }

    #[inline]
    fn add_raw(&self, x: u32, y: u32) -> u32 {
        self.add[x as usize * self.order + y as usize]
    }

    #[inline]
    fn bracket_raw(&self, x: u32, y: u32) -> u32 {
        let n = self.order;
        let xy = self.mul[x as usize * n + y as usize];
        let yx = self.mul[y as usize * n + x as usize];
        self.add_raw(xy, self.neg[yx as usize])
    }

    /// `⟨x, y⟩ = xy − yx`.
    pub fn lie_bracket(&self, x: Elem, y: Elem) -> Elem {
        Elem::new(self.bracket_raw(x.raw(), y.raw()) as usize)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (0..n).all(|y| self.mul[x * n + y] == self.mul[y * n + x]))
    }

    fn law_holds(&self, law: RingLaw, a: &[u32]) -> bool {
        let br = |x, y| self.bracket_raw(x, y);
        match law {
            RingLaw::Rci => br(br(a[0], a[1]), br(a[2], a[3])) == br(br(a[0], a[2]), br(a[1], a[3])),
            RingLaw::Alt3m => br(br(a[0], a[1]), br(a[0], a[2])) == 0,
            RingLaw::Double2 => {
                let t = br(br(a[0], a[1]), br(a[2], a[3]));
                self.add_raw(t, t) == 0
            }
            RingLaw::Nilp2 => br(br(a[0], a[1]), a[2]) == 0,
            RingLaw::ProperWitness => {
                let t = br(a[0], a[1]);
                self.add_raw(t, t) == 0
            }
        }
    }

    /// Exhaustive scan of `law`. For [`RingLaw::ProperWitness`] the scanned
    /// statement is `2⟨x,y⟩ = 0`, so a counterexample is the witness pair.
    pub fn check_law(&self, law: RingLaw, budget: u64) -> Result<Verdict, RingError> {
        let (n, k) = (self.order, law.arity());
        match scan::assignment_count(n, k) {
            Some(total) if total <= budget => {}
            total => {
                let needed = total.map_or_else(|| format!("{n}^{k}"), |t| t.to_string());
                return Err(RingError::LawBudgetExceeded { law, needed, budget });
            }
        }
        let fail = scan::first_failure(n, k, Parallelism::Auto, || (), |_, a| self.law_holds(law, a));
        Ok(Verdict::exhaustive(fail, n, k, law.variables(), &self.names))
    }

    pub fn check_law_sampled(&self, law: RingLaw, count: u64, seed: u64) -> Verdict {
        let out = scan::sampled_failure(self.order, law.arity(), count, seed, (), |_, a| self.law_holds(law, a));
        Verdict::sampled(out, seed, law.variables(), &self.names)
    }

    /// The smallest pair with `2⟨x, y⟩ ≠ 0`.
    pub fn proper_witness(&self) -> Option<(Elem, Elem)> {
        let v = self.check_law(RingLaw::ProperWitness, u64::MAX).expect("unbounded budget");
        v.witness_indices().map(|w| (w[0], w[1]))
    }
}

/// The fixed registry of ring laws. Iterated brackets are left-normed and the
/// semicolon form is `⟨w,x;y,z⟩ = ⟨⟨w,x⟩,⟨y,z⟩⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum RingLaw {
    /// `⟨w,x;y,z⟩ = ⟨w,y;x,z⟩`
    Rci,
    /// `⟨x,y;x,z⟩ = 0`
    Alt3m,
    /// `2⟨w,x;y,z⟩ = 0`
    Double2,
    /// `⟨x,y,z⟩ = 0`
    Nilp2,
    /// `∃ x,y: 2⟨x,y⟩ ≠ 0`
    ProperWitness,
}

impl RingLaw {
    pub const ALL: [RingLaw; 5] =
        [RingLaw::Rci, RingLaw::Alt3m, RingLaw::Double2, RingLaw::Nilp2, RingLaw::ProperWitness];

    pub fn name(self) -> &'static str {
        match self {
            RingLaw::Rci => "RCI",
            RingLaw::Alt3m => "ALT3M",
            RingLaw::Double2 => "DOUBLE2",
            RingLaw::Nilp2 => "NILP2",
            RingLaw::ProperWitness => "PROPER_WITNESS",
        }
    }

    pub fn parse(name: &str) -> Result<Self, RingError> {
        Self::ALL.into_iter().find(|l| l.name() == name).ok_or_else(|| RingError::UnknownLaw { name: name.into() })
    }

    pub fn arity(self) -> usize {
        self.variables().len()
    }

    pub fn variables(self) -> &'static [&'static str] {
        match self {
            RingLaw::Rci | RingLaw::Double2 => &["w", "x", "y", "z"],
            RingLaw::Alt3m | RingLaw::Nilp2 => &["x", "y", "z"],
            RingLaw::ProperWitness => &["x", "y"],
        }
    }
}

impl fmt::Display for RingLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Constructors bounded by [`DEFAULT_ORDER_BUDGET`].
impl FiniteRing {
    pub fn matrix_default(k: usize, n: usize) -> Result<Self, RingError> {
        Self::matrix(k, n, DEFAULT_ORDER_BUDGET)
    }

    pub fn upper_triangular_default(k: usize, n: usize) -> Result<Self, RingError> {
        Self::upper_triangular(k, n, DEFAULT_ORDER_BUDGET)
    }
}
