//! Finite groups stored as dense multiplication tables.
//!
//! Elements are indices `0..n` with the identity pinned at index 0, so every
//! product, inverse, conjugate and commutator is a table lookup. Subgroups are
//! plain member sets over a borrowed group.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// Largest carrier any constructor or closure builds unless told otherwise.
pub const DEFAULT_ORDER_BUDGET: usize = 1024;

/// An element of some finite structure, identified by its table index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    /// Index 0; the identity of every [`FiniteGroup`] and the zero of every ring.
    pub const IDENTITY: Elem = Elem(0);

    pub fn new(index: usize) -> Self {
        Elem(u32::try_from(index).expect("element index exceeds u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub(crate) fn raw(self) -> u32 {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order must be positive")]
    ZeroOrder,
    #[error("invalid metacyclic parameters: {0}")]
    Metacyclic(String),
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("order budget {budget} exceeded (reached {reached} elements)")]
    BudgetExceeded { budget: usize, reached: usize },
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
}

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    names: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order).field("names", &self.names).finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major `n×n` table and checks every group axiom.
    ///
    /// Index 0 must be the identity and `names[0]` must be `"1"`.
    pub fn from_table(mul: Vec<u32>, names: Vec<String>) -> Result<Self, GroupError> {
        let n = names.len();
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let bad = |msg: String| Err(GroupError::InvalidTable(msg));
        if mul.len() != n * n {
            return bad(format!("table has {} cells, expected {}", mul.len(), n * n));
        }
        if let Some(&v) = mul.iter().find(|&&v| v as usize >= n) {
            return bad(format!("entry {v} out of range"));
        }
        if names[0] != "1" {
            return bad(format!("identity must be named \"1\", got {:?}", names[0]));
        }
        let mut seen = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if let Some(j) = seen.insert(name.as_str(), i) {
                return bad(format!("elements {j} and {i} share the name {name:?}"));
            }
        }
        for x in 0..n {
            if mul[x] as usize != x || mul[x * n] as usize != x {
                return bad(format!("index 0 is not a two-sided identity at {x}"));
            }
        }
        // Latin square: every row and every column is a permutation.
        let mut mark = vec![usize::MAX; n];
        for x in 0..n {
            for y in 0..n {
                let v = mul[x * n + y] as usize;
                if mark[v] == x {
                    return bad(format!("row {x} repeats entry {v}"));
                }
                mark[v] = x;
            }
        }
        mark.fill(usize::MAX);
        for y in 0..n {
            for x in 0..n {
                let v = mul[x * n + y] as usize;
                if mark[v] == y {
                    return bad(format!("column {y} repeats entry {v}"));
                }
                mark[v] = y;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = mul[x * n + y] as usize;
                for z in 0..n {
                    let yz = mul[y * n + z] as usize;
                    if mul[xy * n + z] != mul[x * n + yz] {
                        return bad(format!("associativity fails at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        let mut inv = vec![0u32; n];
        for x in 0..n {
            // Latin rows guarantee exactly one solution.
            let y = (0..n).find(|&y| mul[x * n + y] == 0).expect("latin row");
            inv[x] = y as u32;
        }
        Ok(FiniteGroup { order: n, mul, inv, names })
    }

    /// The cyclic group `C_n` with elements `1, a, a2, …`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let mut mul = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mul.push(((i + j) % n) as u32);
            }
        }
        let names = (0..n).map(|i| power_name('a', i)).collect();
        Self::from_table(mul, names)
    }

    /// The metacyclic group of order `m·n` on words `a^i b^j` with `b a b⁻¹ = a^r`.
    ///
    /// Elements are indexed `i + m·j` and multiply as
    /// `(i, j)(k, l) = (i + k·r^j mod m, j + l mod n)`.
    pub fn metacyclic(m: usize, n: usize, r: usize) -> Result<Self, GroupError> {
        if m == 0 || n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        // Modulo 1 every residue is 0; accept r = 0 there so that `dihedral(1)` works.
        let r_ok = if m == 1 { r <= 1 } else { (1..m).contains(&r) };
        if !r_ok {
            return Err(GroupError::Metacyclic(format!("r = {r} must satisfy 1 <= r < m = {m}")));
        }
        if gcd(r, m) != 1 {
            return Err(GroupError::Metacyclic(format!("gcd({r}, {m}) != 1")));
        }
        let rn = pow_mod(r, n, m);
        if rn != 1 % m {
            return Err(GroupError::Metacyclic(format!("{r}^{n} = {rn} (mod {m}), expected 1")));
        }
        let order = m * n;
        // rpow[j] = r^j mod m
        let rpow: Vec<usize> = (0..n).map(|j| pow_mod(r, j, m)).collect();
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            let (i, j) = (x % m, x / m);
            for y in 0..order {
                let (k, l) = (y % m, y / m);
                let a = (i + k * rpow[j]) % m;
                let b = (j + l) % n;
                mul.push((a + m * b) as u32);
            }
        }
        let names = (0..order)
            .map(|x| {
                let (i, j) = (x % m, x / m);
                if i == 0 && j == 0 {
                    return "1".to_string();
                }
                let mut s = String::new();
                if i > 0 {
                    s.push_str(&power_name('a', i));
                }
                if j > 0 {
                    s.push_str(&power_name('b', j));
                }
                s
            })
            .collect();
        Self::from_table(mul, names)
    }

    /// The dihedral group of order `2m`, i.e. `metacyclic(m, 2, m - 1)`.
    pub fn dihedral(m: usize) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::ZeroOrder);
        }
        Self::metacyclic(m, 2, m - 1)
    }

    /// The Heisenberg group of unitriangular 3×3 matrices over `Z_p`, order `p³`.
    ///
    /// Triples multiply as `(x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1·y2)`.
    pub fn heisenberg(p: usize) -> Result<Self, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let order = p * p * p;
        let split = |e: usize| (e / (p * p), (e / p) % p, e % p);
        let join = |x: usize, y: usize, z: usize| x * p * p + y * p + z;
        let mut mul = Vec::with_capacity(order * order);
        for e in 0..order {
            let (x1, y1, z1) = split(e);
            for f in 0..order {
                let (x2, y2, z2) = split(f);
                mul.push(join((x1 + x2) % p, (y1 + y2) % p, (z1 + z2 + x1 * y2) % p) as u32);
            }
        }
        let names = (0..order)
            .map(|e| match split(e) {
                (0, 0, 0) => "1".to_string(),
                (x, y, z) => format!("({x},{y},{z})"),
            })
            .collect();
        Self::from_table(mul, names)
    }

    /// Breadth-first closure of the generators under composition.
    ///
    /// Element 0 is the identity permutation; the rest appear in discovery order.
    pub fn from_permutations(generators: &[Permutation], budget: usize) -> Result<Self, GroupError> {
        let degree = generators.iter().map(Permutation::degree).max().unwrap_or(0);
        let gens: Vec<Permutation> = generators.iter().map(|g| g.extended(degree)).collect();
        let mut elements = vec![Permutation::identity(degree)];
        let mut index: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
        index.insert(elements[0].images.clone(), 0);
        let mut cursor = 0;
        while cursor < elements.len() {
            for g in &gens {
                let next = elements[cursor].then(g);
                if !index.contains_key(&next.images) {
                    if elements.len() >= budget {
                        return Err(GroupError::BudgetExceeded { budget, reached: elements.len() });
                    }
                    index.insert(next.images.clone(), elements.len() as u32);
                    elements.push(next);
                }
            }
            cursor += 1;
        }
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for p in &elements {
            for q in &elements {
                mul.push(index[&p.then(q).images]);
            }
        }
        let names = elements.iter().map(|p| p.to_string()).collect();
        Self::from_table(mul, names)
    }

    /// Componentwise product `G × H`, indexed `i·|H| + j`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, budget: usize) -> Result<Self, GroupError> {
        let (ng, nh) = (g.order, h.order);
        let order = ng.saturating_mul(nh);
        if order > budget {
            return Err(GroupError::BudgetExceeded { budget, reached: order });
        }
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            let (xg, xh) = (x / nh, x % nh);
            for y in 0..order {
                let (yg, yh) = (y / nh, y % nh);
                let a = g.mul[xg * ng + yg] as usize;
                let b = h.mul[xh * nh + yh] as usize;
                mul.push((a * nh + b) as u32);
            }
        }
        let names = (0..order)
            .map(|x| match x {
                0 => "1".to_string(),
                _ => format!("({},{})", g.names[x / nh], h.names[x % nh]),
            })
            .collect();
        Self::from_table(mul, names)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order).map(Elem::new)
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

    /// The raw row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.mul_raw(x.0, y.0))
    }

    #[inline]
    pub(crate) fn mul_raw(&self, x: u32, y: u32) -> u32 {
        self.mul[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        Elem(self.inv[x.index()])
    }

    #[inline]
    pub(crate) fn inv_raw(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: Elem, k: i64) -> Elem {
        Elem(self.pow_raw(x.0, k))
    }

    pub(crate) fn pow_raw(&self, x: u32, k: i64) -> u32 {
        let base = if k < 0 { self.inv_raw(x) } else { x };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul_raw(acc, base);
        }
        acc
    }

    /// `x^y = y⁻¹xy`.
    #[inline]
    pub fn conjugate(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.conjugate_raw(x.0, y.0))
    }

    #[inline]
    pub(crate) fn conjugate_raw(&self, x: u32, y: u32) -> u32 {
        self.mul_raw(self.mul_raw(self.inv_raw(y), x), y)
    }

    /// `[x, y] = x⁻¹y⁻¹xy`.
    #[inline]
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.commutator_raw(x.0, y.0))
    }

    #[inline]
    pub(crate) fn commutator_raw(&self, x: u32, y: u32) -> u32 {
        let left = self.mul_raw(self.inv_raw(x), self.inv_raw(y));
        self.mul_raw(left, self.mul_raw(x, y))
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != Elem::IDENTITY {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.mul[x * n + y] == self.mul[y * n + x]))
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> SubgroupSet<'_> {
        SubgroupSet { group: self, mask: vec![true; self.order], len: self.order }
    }

    pub fn trivial_subgroup(&self) -> SubgroupSet<'_> {
        self.subgroup_closure(core::iter::empty())
    }

    /// The smallest subgroup containing `seed`.
    pub fn subgroup_closure<I: IntoIterator<Item = Elem>>(&self, seed: I) -> SubgroupSet<'_> {
        let mut gens: Vec<u32> = Vec::new();
        let mut is_gen = vec![false; self.order];
        for x in seed {
            if x != Elem::IDENTITY && !is_gen[x.index()] {
                is_gen[x.index()] = true;
                gens.push(x.0);
            }
        }
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut members = vec![0u32];
        let mut cursor = 0;
        // In a finite group closure under products already gives inverses.
        while cursor < members.len() {
            let x = members[cursor];
            for &g in &gens {
                let y = self.mul_raw(x, g);
                if !mask[y as usize] {
                    mask[y as usize] = true;
                    members.push(y);
                }
            }
            cursor += 1;
        }
        SubgroupSet { group: self, mask, len: members.len() }
    }

    /// The smallest normal subgroup containing `seed`.
    pub fn normal_closure<I: IntoIterator<Item = Elem>>(&self, seed: I) -> SubgroupSet<'_> {
        let mut conj = vec![false; self.order];
        for s in seed {
            for g in 0..self.order as u32 {
                conj[self.conjugate_raw(s.0, g) as usize] = true;
            }
        }
        self.subgroup_closure((0..self.order).filter(|&i| conj[i]).map(Elem::new))
    }

    /// Normal closure of `{[h, k] : h ∈ left, k ∈ right}`.
    pub fn commutator_subgroup(&self, left: &SubgroupSet<'_>, right: &SubgroupSet<'_>) -> SubgroupSet<'_> {
        let mut seen = vec![false; self.order];
        for h in left.members() {
            for k in right.members() {
                seen[self.commutator_raw(h.0, k.0) as usize] = true;
            }
        }
        self.normal_closure((0..self.order).filter(|&i| seen[i]).map(Elem::new))
    }

    /// The derived group `G′`.
    pub fn derived_subgroup(&self) -> SubgroupSet<'_> {
        let whole = self.whole();
        self.commutator_subgroup(&whole, &whole)
    }

    /// `[G, G′, G″, …]`, stopping once a term repeats.
    pub fn derived_series(&self) -> Vec<SubgroupSet<'_>> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.commutator_subgroup(last, last);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    /// `[γ₁ = G, γ₂, …]` with `γ_{k+1} = [γ_k, G]`, stopping once a term repeats.
    pub fn lower_central_series(&self) -> Vec<SubgroupSet<'_>> {
        let whole = self.whole();
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.commutator_subgroup(last, &whole);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    /// Smallest `c` with `γ_{c+1} = 1`, or `None` when the group is not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        let last = series.last().expect("nonempty");
        last.is_trivial().then(|| series.len() - 1)
    }

    /// `G″ = 1`.
    pub fn is_metabelian(&self) -> bool {
        let series = self.derived_series();
        series.last().expect("nonempty").is_trivial() && series.len() <= 3
    }
}

/// A subgroup of a borrowed [`FiniteGroup`], stored as a membership mask.
#[derive(Clone)]
pub struct SubgroupSet<'g> {
    group: &'g FiniteGroup,
    mask: Vec<bool>,
    len: usize,
}

impl PartialEq for SubgroupSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.group, other.group) && self.mask == other.mask
    }
}

impl Eq for SubgroupSet<'_> {}

impl fmt::Debug for SubgroupSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members().map(|x| self.group.name(x))).finish()
    }
}

impl<'g> SubgroupSet<'g> {
    /// Wraps an explicit member set, returning `None` unless it is a subgroup.
    pub fn from_members<I: IntoIterator<Item = Elem>>(group: &'g FiniteGroup, members: I) -> Option<Self> {
        let mut mask = vec![false; group.order()];
        for x in members {
            mask[x.index()] = true;
        }
        let closed = mask[0]
            && (0..group.order()).filter(|&x| mask[x]).all(|x| {
                mask[group.inv_raw(x as u32) as usize]
                    && (0..group.order()).filter(|&y| mask[y]).all(|y| mask[group.mul_raw(x as u32, y as u32) as usize])
            });
        let len = mask.iter().filter(|&&b| b).count();
        closed.then_some(SubgroupSet { group, mask, len })
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Never true: a subgroup always contains the identity.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.mask[x.index()]
    }

    pub fn is_trivial(&self) -> bool {
        self.len == 1
    }

    pub fn members(&self) -> impl Iterator<Item = Elem> + '_ {
        self.mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| Elem::new(i))
    }

    pub fn member_names(&self) -> Vec<&'g str> {
        let group = self.group;
        self.members().map(|x| group.name(x)).collect()
    }

    /// Every member squares to the identity.
    pub fn has_exponent_2(&self) -> bool {
        self.members().all(|s| self.group.mul(s, s) == Elem::IDENTITY)
    }
}

/// A permutation of `{1, …, k}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// From 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self, GroupError> {
        let k = images.len();
        let mut hit = vec![false; k];
        for &p in images {
            if p == 0 || p > k || hit[p - 1] {
                return Err(GroupError::MalformedPermutation(format!("{images:?} is not a bijection")));
            }
            hit[p - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&p| (p - 1) as u32).collect() })
    }

    /// From disjoint cycles over 1-based points.
    pub fn from_cycles(cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p == 0 {
                    return Err(GroupError::MalformedPermutation("points are numbered from 1".into()));
                }
                if core::mem::replace(&mut used[p - 1], true) {
                    return Err(GroupError::MalformedPermutation(format!("point {p} appears twice")));
                }
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 2 4 7)(3 6 8 5)`; `()` is the identity.
    pub fn parse_cycles(text: &str) -> Result<Self, GroupError> {
        let malformed = |msg: &str| GroupError::MalformedPermutation(format!("{msg} in {text:?}"));
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(malformed("empty permutation"));
        }
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| malformed("expected '('"))?;
            let close = body.find(')').ok_or_else(|| malformed("unclosed cycle"))?;
            let points = body[..close]
                .split_whitespace()
                .map(|tok| tok.parse::<usize>().map_err(|_| malformed("bad point")))
                .collect::<Result<Vec<_>, _>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(&cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of a 1-based point; points beyond the degree are fixed.
    pub fn apply(&self, point: usize) -> usize {
        match self.images.get(point.wrapping_sub(1)) {
            Some(&img) => img as usize + 1,
            None => point,
        }
    }

    fn extended(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Permutation { images }
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut any = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.images[p] as usize;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("1")?;
        }
        Ok(())
    }
}

fn power_name(letter: char, k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => letter.to_string(),
        _ => format!("{letter}{k}"),
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pow_mod(base: usize, exp: usize, m: usize) -> usize {
    let mut acc = 1 % m;
    for _ in 0..exp {
        acc = acc * base % m;
    }
    acc
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}
