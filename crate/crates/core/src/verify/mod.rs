//! Executable checks of the commutator characterizations over a corpus of
//! groups and rings, and the report they produce.
//!
//! Every check compares two independently computed sides: a table-level
//! property of the commutator double magma and the commutator law or
//! structural invariant that is supposed to characterize it. Equivalences are
//! checked in both directions, implications only when their hypothesis holds.

mod fixtures;
mod groups;
mod report;
mod rings;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::group::DEFAULT_ORDER_BUDGET;
use crate::scan::DEFAULT_EVALUATION_BUDGET;
use crate::spec::{GroupSpec, RingSpec};

pub use fixtures::{NamedTable, C3_BULLET_TABLE, C3_STAR_TABLE, D8_STAR_TABLE};
pub use report::{CheckOutcome, Fact, LabeledVerdict, Report, StructureKind, StructureReport, Summary, Value};

/// Stable identifiers used in config files and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    /// Star commutative, bullet commutative, star equals bullet and `[x,y]^2 = 1` agree.
    CommutativityEquivalence,
    /// Star associative, bullet associative and `[x,y,z][y,z,x] = 1` agree.
    AssociativityLaw,
    /// The three forms of the 3-metabelian law agree.
    MetabelianLawVariants,
    /// The 3-metabelian law implies L1, L2 and L3.
    MetabelianConsequences,
    /// The 3-metabelian law implies `[w,x;y,z][w,y;x,z] = 1`.
    PairLaw,
    /// CI holds iff 3M_I and SQUARE hold, and CI agrees with the table scan.
    InterchangeCharacterization,
    /// Proper double magma iff nonabelian, 3-metabelian, `G'` not of exponent 2 and SQUARE.
    ProperDoubleMagma,
    /// Double semigroup iff class at most 2, proper iff additionally `G'` not of exponent 2.
    DoubleSemigroup,
    /// The basic commutator identities, exhaustively.
    CommutatorIdentities,
    /// The double magma of `a b^-1`: interchange iff abelian, proper iff not of exponent 2.
    DifferenceWord,
    /// RCI iff ALT3M and DOUBLE2, and RCI agrees with the table scan.
    RingInterchange,
    /// Generated tables against transcribed fixtures.
    GoldenTables,
    /// The two-element fixture and the Eckmann–Hilton argument.
    EhAudit,
    /// Whether the dihedral group of order 16 gives a proper double semigroup.
    Dihedral16Claim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Group,
    Ring,
    Fixture,
}

impl CheckId {
    pub const ALL: [CheckId; 14] = [
        CheckId::CommutativityEquivalence,
        CheckId::AssociativityLaw,
        CheckId::MetabelianLawVariants,
        CheckId::MetabelianConsequences,
        CheckId::PairLaw,
        CheckId::InterchangeCharacterization,
        CheckId::ProperDoubleMagma,
        CheckId::DoubleSemigroup,
        CheckId::CommutatorIdentities,
        CheckId::DifferenceWord,
        CheckId::RingInterchange,
        CheckId::GoldenTables,
        CheckId::EhAudit,
        CheckId::Dihedral16Claim,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::CommutativityEquivalence => "commutativity_equivalence",
            CheckId::AssociativityLaw => "associativity_law",
            CheckId::MetabelianLawVariants => "metabelian_law_variants",
            CheckId::MetabelianConsequences => "metabelian_consequences",
            CheckId::PairLaw => "pair_law",
            CheckId::InterchangeCharacterization => "interchange_characterization",
            CheckId::ProperDoubleMagma => "proper_double_magma",
            CheckId::DoubleSemigroup => "double_semigroup",
            CheckId::CommutatorIdentities => "commutator_identities",
            CheckId::DifferenceWord => "difference_word",
            CheckId::RingInterchange => "ring_interchange",
            CheckId::GoldenTables => "golden_tables",
            CheckId::EhAudit => "eh_audit",
            CheckId::Dihedral16Claim => "dihedral16_claim",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.as_str() == text)
    }

    pub fn scope(self) -> Scope {
        match self {
            CheckId::RingInterchange => Scope::Ring,
            CheckId::GoldenTables | CheckId::EhAudit | CheckId::Dihedral16Claim => Scope::Fixture,
            _ => Scope::Group,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Budgets {
    /// Largest assignment count decided exhaustively; larger scans are sampled.
    pub evaluations: u64,
    /// Exhaustive ceiling for the five-variable consequences of the 3-metabelian law.
    pub consequence_evaluations: u64,
    /// Assignments drawn when a scan is sampled.
    pub samples: u64,
    /// Largest group or ring order a spec may build.
    pub order: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            evaluations: DEFAULT_EVALUATION_BUDGET,
            consequence_evaluations: 1 << 24,
            samples: 1_000_000,
            order: DEFAULT_ORDER_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusConfig {
    pub groups: Vec<String>,
    pub rings: Vec<String>,
    /// Checks to run; empty selects all of them.
    pub checks: Vec<CheckId>,
    /// Run the fixture checks, which do not depend on the corpus.
    pub fixtures: bool,
    pub budgets: Budgets,
    /// Seed for every sampled scan.
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            groups: Vec::new(),
            rings: Vec::new(),
            checks: Vec::new(),
            fixtures: true,
            budgets: Budgets::default(),
            seed: 1,
        }
    }
}

/// Quaternion group as the regular representation of `i` and `j`.
pub const QUATERNION_SPEC: &str = "perm:(1 2 4 7)(3 6 8 5),(1 3 4 8)(2 5 7 6)";

/// The shipped corpus.
pub const DEFAULT_GROUPS: &[&str] = &[
    "cyclic:1",
    "cyclic:6",
    "product:cyclic:2,cyclic:2",
    "dihedral:3",
    "dihedral:4",
    QUATERNION_SPEC,
    "heisenberg:2",
    "dihedral:5",
    "product:dihedral:3,cyclic:2",
    "perm:(1 2 3),(2 3 4)",
    "metacyclic:5,4,2",
    "metacyclic:7,3,2",
    "dihedral:8",
    "metacyclic:8,2,3",
    "metacyclic:8,2,5",
    "product:dihedral:4,cyclic:2",
    "perm:(1 2),(1 2 3 4)",
    "heisenberg:3",
    "metacyclic:9,3,4",
    "dihedral:16",
];

pub const DEFAULT_RINGS: &[&str] = &["zmod:6", "matrix:2,2", "uppertri:2,2", "uppertri:2,3", "matrix:2,3"];

impl CorpusConfig {
    /// No structures and no fixtures.
    pub fn empty() -> Self {
        CorpusConfig { fixtures: false, ..Self::default() }
    }

    pub fn default_corpus() -> Self {
        CorpusConfig {
            groups: DEFAULT_GROUPS.iter().map(|s| s.to_string()).collect(),
            rings: DEFAULT_RINGS.iter().map(|s| s.to_string()).collect(),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let b = &self.budgets;
        for (field, value) in [
            ("evaluations", b.evaluations),
            ("consequence_evaluations", b.consequence_evaluations),
            ("samples", b.samples),
            ("order", b.order as u64),
        ] {
            if value == 0 {
                return Err(ConfigError::ZeroBudget(field));
            }
        }
        Ok(())
    }

    pub fn selects(&self, check: CheckId) -> bool {
        self.checks.is_empty() || self.checks.contains(&check)
    }

    fn selected(&self, scope: Scope) -> Vec<CheckId> {
        CheckId::ALL.into_iter().filter(|c| c.scope() == scope && self.selects(*c)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("budget {0} must be positive")]
    ZeroBudget(&'static str),
}

/// Runs every selected check over the corpus. The result depends only on the
/// config, so equal configs give equal reports.
pub fn run_corpus(config: &CorpusConfig) -> Result<Report, ConfigError> {
    config.validate()?;
    let group_checks = config.selected(Scope::Group);
    let ring_checks = config.selected(Scope::Ring);
    let mut structures = Vec::new();
    for text in &config.groups {
        let entry = match GroupSpec::parse(text).and_then(|s| s.build(config.budgets.order)) {
            Ok(group) => groups::run(text, &group, &group_checks, config),
            Err(e) => StructureReport::failed(StructureKind::Group, text, e.to_string()),
        };
        structures.push(entry);
    }
    for text in &config.rings {
        let entry = match RingSpec::parse(text).and_then(|s| s.build(config.budgets.order)) {
            Ok(ring) => rings::run(text, &ring, &ring_checks, config),
            Err(e) => StructureReport::failed(StructureKind::Ring, text, e.to_string()),
        };
        structures.push(entry);
    }
    let fixtures = if config.fixtures {
        config.selected(Scope::Fixture).into_iter().map(|c| fixtures::run(c, config)).collect()
    } else {
        Vec::new()
    };
    Ok(Report::new(config.seed, structures, fixtures))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn only(groups: &[&str], checks: &[CheckId]) -> CorpusConfig {
        CorpusConfig {
            groups: groups.iter().map(|s| s.to_string()).collect(),
            checks: checks.to_vec(),
            fixtures: false,
            ..CorpusConfig::default()
        }
    }

    #[test]
    fn ids_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(CheckId::parse(c.as_str()), Some(c));
        }
        assert_eq!(CheckId::parse("prop"), None);
    }

    #[test]
    fn empty_corpus_passes() {
        let r = run_corpus(&CorpusConfig::empty()).unwrap();
        assert!(r.passed);
        assert!(r.structures.is_empty() && r.fixtures.is_empty());
        assert_eq!(r.summary.checks, 0);
    }

    #[test]
    fn bad_spec_is_reported_not_fatal() {
        let r = run_corpus(&only(&["dihedral:x", "cyclic:2"], &[])).unwrap();
        assert_eq!(r.structures.len(), 2);
        assert!(r.structures[0].error.is_some());
        assert!(r.structures[1].error.is_none());
        assert!(!r.passed);
        assert_eq!(r.summary.errors, 1);
    }

    #[test]
    fn zero_budget_rejected() {
        let mut c = CorpusConfig::empty();
        c.budgets.samples = 0;
        assert_eq!(run_corpus(&c), Err(ConfigError::ZeroBudget("samples")));
    }

    #[test]
    fn s4_interchange_fails_consistently() {
        let r = run_corpus(&only(&["perm:(1 2),(1 2 3 4)"], &[CheckId::InterchangeCharacterization])).unwrap();
        assert!(r.passed);
        let check = &r.structures[0].checks[0];
        let ci = check.verdict("CI").unwrap();
        assert!(!ci.holds());
        assert_eq!(ci.witness.as_ref().unwrap().len(), 4);
        assert!(!check.verdict("interchange_table").unwrap().holds());
    }

    #[test]
    fn each_selected_check_appears_once() {
        let r = run_corpus(&only(&["dihedral:3", "heisenberg:3"], &[])).unwrap();
        for s in &r.structures {
            let ids: Vec<_> = s.checks.iter().map(|c| c.id).collect();
            assert_eq!(ids, CheckId::ALL.iter().copied().filter(|c| c.scope() == Scope::Group).collect::<Vec<_>>());
        }
        assert!(r.passed, "{:?}", r.failures());
    }
}
