//! Human and machine renderings of a suite report. Both are pure functions of
//! the report, so equal reports render to equal bytes.

use std::fmt::Write;

use dimagma_core::verify::{CheckOutcome, Fact, Report, StructureKind, Value};

use crate::CliError;

pub fn to_json(report: &Report) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}

fn value(v: &Value) -> String {
    match v {
        Value::Bool(b) => b.to_string(),
        Value::Int(n) => n.to_string(),
        Value::List(xs) => xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" "),
        Value::Text(t) => t.clone(),
        Value::None => "none".into(),
    }
}

fn facts(facts: &[Fact]) -> String {
    facts.iter().map(|f| format!("{}={}", f.name, value(&f.value))).collect::<Vec<_>>().join(", ")
}

fn check(out: &mut String, c: &CheckOutcome) {
    let mark = match (c.passed, c.vacuous) {
        (false, _) => "FAIL",
        (true, true) => "skip",
        (true, false) => "ok",
    };
    let _ = writeln!(out, "  {mark:<4} {}", c.id);
    for v in &c.verdicts {
        let _ = writeln!(out, "         {}: {}", v.label, v.verdict);
    }
    if !c.facts.is_empty() {
        let _ = writeln!(out, "         {}", facts(&c.facts));
    }
    if let Some(note) = &c.note {
        let _ = writeln!(out, "         note: {note}");
    }
}

pub fn to_text(report: &Report) -> String {
    let mut out = String::new();
    for s in &report.structures {
        let kind = match s.kind {
            StructureKind::Group => "group",
            StructureKind::Ring => "ring",
        };
        let _ = writeln!(out, "{kind} {}", s.spec);
        if let Some(e) = &s.error {
            let _ = writeln!(out, "  ERROR {e}");
            continue;
        }
        let _ = writeln!(out, "  {}", facts(&s.facts));
        for c in &s.checks {
            check(&mut out, c);
        }
    }
    if !report.fixtures.is_empty() {
        out.push_str("fixtures\n");
        for c in &report.fixtures {
            check(&mut out, c);
        }
    }
    let m = &report.summary;
    let _ = writeln!(
        out,
        "{} structures, {} checks: {} passed, {} failed, {} errors",
        m.structures, m.checks, m.passed, m.failed, m.errors
    );
    let _ = writeln!(out, "suite {}", if report.passed { "PASS" } else { "FAIL" });
    out
}
