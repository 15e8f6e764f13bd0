use alloc::format;

use super::report::{CheckOutcome, Fact, StructureKind, StructureReport};
use super::{CheckId, CorpusConfig};
use crate::construct::ring_commutator_double;
use crate::ring::{FiniteRing, RingError, RingLaw};
use crate::verdict::Verdict;

pub(super) fn run(spec: &str, ring: &FiniteRing, checks: &[CheckId], config: &CorpusConfig) -> StructureReport {
    let witness = ring.proper_witness().map(|(x, y)| format!("{},{}", ring.name(x), ring.name(y)));
    let facts = alloc::vec![
        Fact::new("order", ring.order()),
        Fact::new("commutative", ring.is_commutative()),
        Fact::new("proper_witness", witness),
    ];
    let checks = checks
        .iter()
        .map(|&id| {
            assert_eq!(id, CheckId::RingInterchange, "not a ring check");
            interchange(ring, config)
        })
        .collect();
    StructureReport { kind: StructureKind::Ring, spec: spec.into(), error: None, facts, checks }
}

fn decide(ring: &FiniteRing, law: RingLaw, config: &CorpusConfig) -> Verdict {
    match ring.check_law(law, config.budgets.evaluations) {
        Ok(v) => v,
        Err(RingError::LawBudgetExceeded { .. }) => ring.check_law_sampled(law, config.budgets.samples, config.seed),
        Err(e) => panic!("{e}"),
    }
}

/// RCI against ALT3M and DOUBLE2, and against the table scan of the ring
/// commutator double magma.
fn interchange(ring: &FiniteRing, config: &CorpusConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new(CheckId::RingInterchange);
    let rci = out.verdict_entry("RCI", decide(ring, RingLaw::Rci, config));
    let alt = out.verdict_entry("ALT3M", decide(ring, RingLaw::Alt3m, config));
    let double = out.verdict_entry("DOUBLE2", decide(ring, RingLaw::Double2, config));
    out.verdict_entry("NILP2", decide(ring, RingLaw::Nilp2, config));
    let d = ring_commutator_double(ring);
    let table = d
        .satisfies_interchange(config.budgets.evaluations)
        .unwrap_or_else(|_| d.satisfies_interchange_sampled(config.budgets.samples, config.seed));
    let table = out.verdict_entry("interchange_table", table);
    let witness = ring.proper_witness().is_some();
    out.fact("proper", d.is_proper());
    out.fact("has_proper_witness", witness);
    out.require(rci == (alt && double));
    out.require(rci == table);
    out.require(d.is_proper() == witness);
    out
}
