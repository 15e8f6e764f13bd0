use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::report::{CheckOutcome, Fact, StructureKind, StructureReport};
use super::{CheckId, CorpusConfig};
use crate::construct::{commutator_double, word_double, WordPair};
use crate::group::FiniteGroup;
use crate::magma::DoubleMagma;
use crate::scan::{self, Parallelism};
use crate::verdict::Verdict;
use crate::word::{builtin_law, check_law_exhaustive, check_law_sampled, LawError};

/// Table-level predicates of the commutator double magma.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Table {
    StarCommutative,
    BulletCommutative,
    StarAssociative,
    BulletAssociative,
    Interchange,
}

/// A group with its double magma and every verdict computed so far, so that
/// checks sharing a law scan it once.
struct Context<'a> {
    group: &'a FiniteGroup,
    double: DoubleMagma,
    config: &'a CorpusConfig,
    laws: BTreeMap<&'static str, Verdict>,
    tables: BTreeMap<Table, Verdict>,
    derived_exponent_2: bool,
    class: Option<usize>,
}

pub(super) fn run(spec: &str, group: &FiniteGroup, checks: &[CheckId], config: &CorpusConfig) -> StructureReport {
    let derived = group.derived_subgroup();
    let mut cx = Context {
        group,
        double: commutator_double(group),
        config,
        laws: BTreeMap::new(),
        tables: BTreeMap::new(),
        derived_exponent_2: derived.has_exponent_2(),
        class: group.nilpotency_class(),
    };
    let witness = cx.double.proper_witness().map(|(x, y)| format!("{},{}", group.name(x), group.name(y)));
    let sizes = |series: Vec<crate::group::SubgroupSet<'_>>| series.iter().map(|s| s.len()).collect::<Vec<_>>();
    let facts = alloc::vec![
        Fact::new("order", group.order()),
        Fact::new("abelian", group.is_abelian()),
        Fact::new("metabelian", group.is_metabelian()),
        Fact::new("three_metabelian", cx.law("3M_I").holds()),
        Fact::new("nilpotency_class", cx.class),
        Fact::new("derived_series", sizes(group.derived_series())),
        Fact::new("lower_central_series", sizes(group.lower_central_series())),
        Fact::new("derived_order", derived.len()),
        Fact::new("derived_exponent_2", cx.derived_exponent_2),
        Fact::new("proper_witness", witness),
    ];
    let checks = checks.iter().map(|&id| cx.check(id)).collect();
    StructureReport { kind: StructureKind::Group, spec: spec.into(), error: None, facts, checks }
}

/// Exhaustive when the scan fits `limit`, seeded sampling otherwise.
fn decide(group: &FiniteGroup, name: &str, limit: u64, config: &CorpusConfig) -> Verdict {
    let law = builtin_law(name).expect("registered law");
    match check_law_exhaustive(group, &law, limit) {
        Ok(v) => v,
        Err(LawError::BudgetExceeded { .. }) => check_law_sampled(group, &law, config.budgets.samples, config.seed),
        Err(e) => panic!("{e}"),
    }
}

impl Context<'_> {
    fn law(&mut self, name: &'static str) -> Verdict {
        if let Some(v) = self.laws.get(name) {
            return v.clone();
        }
        let limit = match name {
            "L1" | "L2" | "L3" => self.config.budgets.consequence_evaluations,
            _ => self.config.budgets.evaluations,
        };
        let v = decide(self.group, name, limit, self.config);
        self.laws.insert(name, v.clone());
        v
    }

    fn table(&mut self, which: Table) -> Verdict {
        if let Some(v) = self.tables.get(&which) {
            return v.clone();
        }
        let d = &self.double;
        let v = match which {
            Table::StarCommutative => d.star().is_commutative(),
            Table::BulletCommutative => d.bullet().is_commutative(),
            Table::StarAssociative => d.star().is_associative(),
            Table::BulletAssociative => d.bullet().is_associative(),
            Table::Interchange => interchange(d, self.config),
        };
        self.tables.insert(which, v.clone());
        v
    }

    fn record_law(&mut self, out: &mut CheckOutcome, name: &'static str) -> bool {
        let v = self.law(name);
        out.verdict_entry(name, v)
    }

    fn record_table(&mut self, out: &mut CheckOutcome, label: &str, which: Table) -> bool {
        let v = self.table(which);
        out.verdict_entry(label, v)
    }

    fn check(&mut self, id: CheckId) -> CheckOutcome {
        let mut out = CheckOutcome::new(id);
        match id {
            CheckId::CommutativityEquivalence => self.commutativity(&mut out),
            CheckId::AssociativityLaw => self.associativity(&mut out),
            CheckId::MetabelianLawVariants => {
                let a = self.record_law(&mut out, "3M_I");
                let b = self.record_law(&mut out, "3M_II");
                let c = self.record_law(&mut out, "3M_III");
                out.require(a == b && b == c);
            }
            CheckId::MetabelianConsequences => self.implication(&mut out, &["L1", "L2", "L3"]),
            CheckId::PairLaw => self.implication(&mut out, &["PAIR"]),
            CheckId::InterchangeCharacterization => {
                let ci = self.record_law(&mut out, "CI");
                let m = self.record_law(&mut out, "3M_I");
                let sq = self.record_law(&mut out, "SQUARE");
                let table = self.record_table(&mut out, "interchange_table", Table::Interchange);
                out.require(ci == (m && sq));
                out.require(ci == table);
            }
            CheckId::ProperDoubleMagma => self.proper_double_magma(&mut out),
            CheckId::DoubleSemigroup => self.double_semigroup(&mut out),
            CheckId::CommutatorIdentities => identities(self.group, &mut out),
            CheckId::DifferenceWord => difference_word(self.group, self.config, &mut out),
            CheckId::RingInterchange | CheckId::GoldenTables | CheckId::EhAudit | CheckId::Dihedral16Claim => {
                unreachable!("not a group check")
            }
        }
        out
    }

    fn commutativity(&mut self, out: &mut CheckOutcome) {
        let star = self.record_table(out, "star_commutative", Table::StarCommutative);
        let bullet = self.record_table(out, "bullet_commutative", Table::BulletCommutative);
        let square = self.record_law(out, "COMM_SQ");
        let coincide = !self.double.is_proper();
        out.fact("operations_coincide", coincide);
        out.require(star == bullet && bullet == coincide && coincide == square);
    }

    fn associativity(&mut self, out: &mut CheckOutcome) {
        let star = self.record_table(out, "star_associative", Table::StarAssociative);
        let law = self.record_law(out, "ASSOC_COMM");
        let bullet = self.record_table(out, "bullet_associative", Table::BulletAssociative);
        out.require(star == law && law == bullet);
    }

    /// Asserts `laws` only when the 3-metabelian law holds.
    fn implication(&mut self, out: &mut CheckOutcome, laws: &[&'static str]) {
        if !self.record_law(out, "3M_I") {
            out.vacuous = true;
            out.note = Some("3M_I fails, nothing to assert".into());
            return;
        }
        for &law in laws {
            let holds = self.record_law(out, law);
            out.require(holds);
        }
    }

    fn proper_double_magma(&mut self, out: &mut CheckOutcome) {
        let interchange = self.record_table(out, "interchange_table", Table::Interchange);
        let m = self.record_law(out, "3M_I");
        let sq = self.record_law(out, "SQUARE");
        let proper = self.double.is_proper();
        let abelian = self.group.is_abelian();
        let lhs = interchange && proper;
        let rhs = !abelian && m && !self.derived_exponent_2 && sq;
        out.fact("proper", proper);
        out.fact("abelian", abelian);
        out.fact("derived_exponent_2", self.derived_exponent_2);
        out.fact("proper_double_magma", lhs);
        out.fact("structural_conditions", rhs);
        out.require(lhs == rhs);
    }

    fn double_semigroup(&mut self, out: &mut CheckOutcome) {
        let interchange = self.record_table(out, "interchange_table", Table::Interchange);
        let star = self.record_table(out, "star_associative", Table::StarAssociative);
        let bullet = self.record_table(out, "bullet_associative", Table::BulletAssociative);
        let semigroup = interchange && star && bullet;
        let class_at_most_2 = self.class.is_some_and(|c| c <= 2);
        let proper = semigroup && self.double.is_proper();
        let structural = !self.group.is_abelian() && self.class == Some(2) && !self.derived_exponent_2;
        out.fact("double_semigroup", semigroup);
        out.fact("nilpotency_class", self.class);
        out.fact("class_at_most_2", class_at_most_2);
        out.fact("proper_double_semigroup", proper);
        out.fact("structural_conditions", structural);
        out.require(semigroup == class_at_most_2);
        out.require(proper == structural);
    }
}

fn interchange(d: &DoubleMagma, config: &CorpusConfig) -> Verdict {
    d.satisfies_interchange(config.budgets.evaluations)
        .unwrap_or_else(|_| d.satisfies_interchange_sampled(config.budgets.samples, config.seed))
}

/// The elementary commutator identities, each in every stated form, scanned
/// with the group's own operations rather than the word evaluator.
fn identities(g: &FiniteGroup, out: &mut CheckOutcome) {
    let mul = |x, y| g.mul_raw(x, y);
    let inv = |x| g.inv_raw(x);
    let conj = |x, y| g.conjugate_raw(x, y);
    let comm = |x, y| g.commutator_raw(x, y);
    type Identity<'f> = (&'static str, usize, &'f (dyn Fn(&[u32]) -> bool + Sync));
    let conjugate_form = |a: &[u32]| {
        let (x, y) = (a[0], a[1]);
        let c = comm(x, y);
        c == mul(inv(x), conj(x, y)) && c == mul(conj(inv(y), x), y)
    };
    let inverse_swap = |a: &[u32]| inv(comm(a[0], a[1])) == comm(a[1], a[0]);
    let inverse_argument = |a: &[u32]| {
        let (x, y) = (a[0], a[1]);
        let c = comm(x, y);
        comm(inv(x), y) == inv(conj(c, inv(x))) && comm(x, inv(y)) == inv(conj(c, inv(y)))
    };
    let product_left = |a: &[u32]| {
        let (x, y, z) = (a[0], a[1], a[2]);
        let lhs = comm(mul(x, y), z);
        let xz = comm(x, z);
        lhs == mul(conj(xz, y), comm(y, z)) && lhs == mul(mul(xz, comm(xz, y)), comm(y, z))
    };
    let product_right = |a: &[u32]| {
        let (x, y, z) = (a[0], a[1], a[2]);
        let lhs = comm(x, mul(y, z));
        let (xz, xy) = (comm(x, z), comm(x, y));
        lhs == mul(xz, conj(xy, z)) && lhs == mul(mul(xz, xy), comm(xy, z))
    };
    let all: [Identity<'_>; 5] = [
        ("conjugate_form", 2, &conjugate_form),
        ("inverse_swap", 2, &inverse_swap),
        ("inverse_argument", 2, &inverse_argument),
        ("product_left", 3, &product_left),
        ("product_right", 3, &product_right),
    ];
    let n = g.order();
    for (label, arity, holds) in all {
        let fail = scan::first_failure(n, arity, Parallelism::Auto, || (), |_, a| holds(a));
        let v = Verdict::exhaustive(fail, n, arity, &["a", "b", "c"][..arity], g.names());
        let ok = out.verdict_entry(label, v);
        out.require(ok);
    }
}

/// `x * y = x y^-1`, `x • y = y x^-1`: interchange holds iff `G` is abelian and
/// the operations differ iff `G` is not of exponent 2. In the abelian,
/// non-exponent-2 case neither operation is commutative or associative.
fn difference_word(g: &FiniteGroup, config: &CorpusConfig, out: &mut CheckOutcome) {
    let d = word_double(g, &WordPair::parse("a*b^-1").expect("fixed word"));
    let interchange = out.verdict_entry("interchange_table", interchange(&d, config));
    let commutative = out.verdict_entry("star_commutative", d.star().is_commutative());
    let associative = out.verdict_entry("star_associative", d.star().is_associative());
    let abelian = g.is_abelian();
    let exponent_2 = g.whole().has_exponent_2();
    let proper = d.is_proper();
    out.fact("abelian", abelian);
    out.fact("exponent_2", exponent_2);
    out.fact("proper", proper);
    out.require(interchange == abelian);
    out.require(proper == !exponent_2);
    if abelian && !exponent_2 {
        out.require(!commutative && !associative);
    }
}
