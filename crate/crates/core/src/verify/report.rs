use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::CheckId;
use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(u64),
    List(Vec<u64>),
    Text(String),
    None,
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as u64)
    }
}

impl From<Vec<usize>> for Value {
    fn from(v: Vec<usize>) -> Self {
        Value::List(v.into_iter().map(|n| n as u64).collect())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.into())
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::None, Into::into)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub name: String,
    pub value: Value,
}

impl Fact {
    pub fn new(name: &str, value: impl Into<Value>) -> Self {
        Fact { name: name.into(), value: value.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledVerdict {
    pub label: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub id: CheckId,
    pub passed: bool,
    /// The hypothesis of an implication failed, so nothing was asserted.
    pub vacuous: bool,
    pub verdicts: Vec<LabeledVerdict>,
    pub facts: Vec<Fact>,
    pub note: Option<String>,
}

impl CheckOutcome {
    pub(crate) fn new(id: CheckId) -> Self {
        CheckOutcome { id, passed: true, vacuous: false, verdicts: Vec::new(), facts: Vec::new(), note: None }
    }

    pub(crate) fn verdict_entry(&mut self, label: &str, verdict: Verdict) -> bool {
        let holds = verdict.holds();
        self.verdicts.push(LabeledVerdict { label: label.into(), verdict });
        holds
    }

    pub(crate) fn fact(&mut self, name: &str, value: impl Into<Value>) {
        self.facts.push(Fact::new(name, value));
    }

    /// Records an expectation; any false one fails the check.
    pub(crate) fn require(&mut self, ok: bool) {
        self.passed &= ok;
    }

    pub fn verdict(&self, label: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.label == label).map(|v| &v.verdict)
    }

    pub fn fact_value(&self, name: &str) -> Option<&Value> {
        self.facts.iter().find(|f| f.name == name).map(|f| &f.value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    Group,
    Ring,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub kind: StructureKind,
    pub spec: String,
    /// Set when the spec failed to parse or build; no checks ran.
    pub error: Option<String>,
    pub facts: Vec<Fact>,
    pub checks: Vec<CheckOutcome>,
}

impl StructureReport {
    pub(crate) fn failed(kind: StructureKind, spec: &str, error: String) -> Self {
        StructureReport { kind, spec: spec.into(), error: Some(error), facts: Vec::new(), checks: Vec::new() }
    }

    pub fn check(&self, id: CheckId) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn fact_value(&self, name: &str) -> Option<&Value> {
        self.facts.iter().find(|f| f.name == name).map(|f| &f.value)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub structures: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub seed: u64,
    pub passed: bool,
    pub summary: Summary,
    pub structures: Vec<StructureReport>,
    pub fixtures: Vec<CheckOutcome>,
}

impl Report {
    pub(crate) fn new(seed: u64, structures: Vec<StructureReport>, fixtures: Vec<CheckOutcome>) -> Self {
        let mut summary = Summary { structures: structures.len(), ..Summary::default() };
        let all = structures.iter().flat_map(|s| &s.checks).chain(&fixtures);
        for c in all {
            summary.checks += 1;
            if c.passed {
                summary.passed += 1;
            } else {
                summary.failed += 1;
            }
        }
        summary.errors = structures.iter().filter(|s| s.error.is_some()).count();
        let passed = summary.failed == 0 && summary.errors == 0;
        Report { seed, passed, summary, structures, fixtures }
    }

    /// `(structure spec, check)` for every failed check; fixtures use an empty spec.
    pub fn failures(&self) -> Vec<(&str, CheckId)> {
        let from_structures = self
            .structures
            .iter()
            .flat_map(|s| s.checks.iter().filter(|c| !c.passed).map(move |c| (s.spec.as_str(), c.id)));
        let from_fixtures = self.fixtures.iter().filter(|c| !c.passed).map(|c| ("", c.id));
        from_structures.chain(from_fixtures).collect()
    }

    pub fn structure(&self, spec: &str) -> Option<&StructureReport> {
        self.structures.iter().find(|s| s.spec == spec)
    }

    pub fn fixture(&self, id: CheckId) -> Option<&CheckOutcome> {
        self.fixtures.iter().find(|c| c.id == id)
    }
}
