//! Command-line surface for building commutator double magmas, checking laws
//! and running the verification suite.
//!
//! Exit codes: 0 when the property holds or the run succeeds, 1 when it fails
//! or a counterexample is found, 2 on usage or input errors.

pub mod report;
pub mod table;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dimagma_core::verify::{run_corpus, CheckId, CorpusConfig};
use dimagma_core::word::{check_law_exhaustive, check_law_sampled};
use dimagma_core::{
    builtin_law, commutator_double, parse_law, ring_commutator_double, word_double, DoubleMagma, GroupSpec, Law,
    RingLaw, RingSpec, Verdict, WordPair, DEFAULT_EVALUATION_BUDGET, DEFAULT_ORDER_BUDGET,
};

use table::{Operation, Structured};

/// Shipped corpus, also available as `configs/default.toml`.
pub const DEFAULT_CONFIG: &str = include_str!("../configs/default.toml");

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("config: {0}")]
    Config(#[from] toml::de::Error),
    #[error("{path}: {source}")]
    File { path: PathBuf, source: std::io::Error },
}

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "dimagma", version, about = "Commutator double magmas of finite groups and rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print order, series and commutator flags of a group.
    Group {
        /// e.g. `dihedral:8`, `perm:(1 2),(1 2 3 4)`, `product:cyclic:2,cyclic:3`
        spec: String,
    },
    /// Decide a commutator law on a group.
    Law {
        spec: String,
        /// A builtin name such as `3M_I`, or an equation like `[x,y;x,z] = 1`.
        law: String,
        #[command(flatten)]
        scan: ScanArgs,
    },
    #[command(subcommand)]
    Magma(MagmaCommand),
    #[command(subcommand)]
    Ring(RingCommand),
    #[command(subcommand)]
    Suite(SuiteCommand),
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    pub mode: Mode,
    /// Assignments drawn in sampled mode.
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Largest exhaustive scan.
    #[arg(long, default_value_t = DEFAULT_EVALUATION_BUDGET)]
    pub budget: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Exhaustive within the budget, sampled beyond it.
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Debug, Subcommand)]
pub enum MagmaCommand {
    /// Print one operation table of a double magma.
    Table {
        spec: String,
        #[command(flatten)]
        construction: ConstructionArgs,
        #[arg(long, value_enum, default_value_t = Operation::Star)]
        op: Operation,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write `a⁶` instead of `a6` in text tables.
        #[arg(long)]
        superscript: bool,
    },
    /// Report interchange, properness, commutativity, associativity and identities.
    Check {
        spec: String,
        #[command(flatten)]
        construction: ConstructionArgs,
        #[arg(long, default_value_t = DEFAULT_EVALUATION_BUDGET)]
        budget: u64,
    },
}

#[derive(Debug, Args)]
pub struct ConstructionArgs {
    /// `commutator`, `word:<W(a,b)>` or `ring-commutator` (the spec is then a ring).
    #[arg(long, default_value = "commutator")]
    pub construction: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    /// JSON with both operations.
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum RingCommand {
    /// Print order, commutativity and a properness witness.
    Inspect {
        /// e.g. `zmod:6`, `matrix:2,3`, `uppertri:2,2`
        spec: String,
    },
    /// Decide one of RCI, ALT3M, DOUBLE2, NILP2, PROPER_WITNESS.
    Check {
        spec: String,
        law: String,
        #[command(flatten)]
        scan: ScanArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum SuiteCommand {
    /// Run the verification suite.
    Run(SuiteArgs),
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// TOML corpus config; the shipped default when omitted.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long)]
    pub json_out: Option<PathBuf>,
    /// Write the text report here.
    #[arg(long)]
    pub text_out: Option<PathBuf>,
    /// Print the JSON report instead of the text report.
    #[arg(long)]
    pub json: bool,
    /// Override the config seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Restrict to these checks (repeatable).
    #[arg(long = "check")]
    pub checks: Vec<String>,
}

/// Outcome of a command: text for stdout and whether the property held.
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, success: true }
    }
}

pub fn execute(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Group { spec } => group_inspect(&spec),
        Command::Law { spec, law, scan } => law_check(&spec, &law, &scan),
        Command::Magma(MagmaCommand::Table { spec, construction, op, format, superscript }) => {
            let d = build_double(&spec, &construction.construction)?;
            let magma = op.of(&d);
            let stdout = match format {
                Format::Text => table::render_text(magma, op.symbol(), superscript),
                Format::Csv => table::render_csv(magma, op.symbol())?,
                Format::Structured => serde_json::to_string_pretty(&Structured::new(&d))? + "\n",
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Magma(MagmaCommand::Check { spec, construction, budget }) => {
            magma_check(&build_double(&spec, &construction.construction)?, budget)
        }
        Command::Ring(RingCommand::Inspect { spec }) => ring_inspect(&spec),
        Command::Ring(RingCommand::Check { spec, law, scan }) => ring_check(&spec, &law, &scan),
        Command::Suite(SuiteCommand::Run(args)) => suite_run(&args),
    }
}

/// Parses arguments, runs, prints, and maps the result to an exit code.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(if out.success { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn group(spec: &str) -> Result<dimagma_core::FiniteGroup, CliError> {
    GroupSpec::parse(spec).and_then(|s| s.build(DEFAULT_ORDER_BUDGET)).map_err(input)
}

fn ring(spec: &str) -> Result<dimagma_core::FiniteRing, CliError> {
    RingSpec::parse(spec).and_then(|s| s.build(DEFAULT_ORDER_BUDGET)).map_err(input)
}

pub fn build_double(spec: &str, construction: &str) -> Result<DoubleMagma, CliError> {
    match construction {
        "commutator" => Ok(commutator_double(&group(spec)?)),
        "ring-commutator" => Ok(ring_commutator_double(&ring(spec)?)),
        other => match other.strip_prefix("word:") {
            Some(word) => Ok(word_double(&group(spec)?, &WordPair::parse(word).map_err(input)?)),
            None => {
                Err(input(format!("unknown construction {other:?}; expected commutator, word:<W> or ring-commutator")))
            }
        },
    }
}

fn group_inspect(spec: &str) -> Result<Outcome, CliError> {
    let g = group(spec)?;
    let three_metabelian =
        check_law_exhaustive(&g, &builtin_law("3M_I").map_err(input)?, u64::MAX).map_err(input)?.holds();
    let sizes =
        |s: Vec<dimagma_core::SubgroupSet<'_>>| s.iter().map(|x| x.len().to_string()).collect::<Vec<_>>().join(" ");
    let derived = g.derived_subgroup();
    let mut out = String::new();
    let _ = writeln!(out, "order: {}", g.order());
    let _ = writeln!(out, "abelian: {}", g.is_abelian());
    let _ = writeln!(out, "metabelian: {}", g.is_metabelian());
    let _ = writeln!(out, "3-metabelian: {three_metabelian}");
    let _ = match g.nilpotency_class() {
        Some(c) => writeln!(out, "nilpotency class: {c}"),
        None => writeln!(out, "nilpotency class: not nilpotent"),
    };
    let _ = writeln!(out, "derived series: {}", sizes(g.derived_series()));
    let _ = writeln!(out, "lower central series: {}", sizes(g.lower_central_series()));
    let _ = writeln!(out, "derived subgroup order: {}", derived.len());
    let _ = writeln!(out, "derived subgroup exponent 2: {}", derived.has_exponent_2());
    Ok(Outcome::ok(out))
}

fn resolve_law(text: &str) -> Result<Law, CliError> {
    if text.contains('=') {
        parse_law(text).map_err(input)
    } else {
        builtin_law(text).map_err(input)
    }
}

fn verdict_outcome(header: String, v: &Verdict) -> Outcome {
    Outcome { stdout: format!("{header}\n{v}\n"), success: v.holds() }
}

fn law_check(spec: &str, law: &str, scan: &ScanArgs) -> Result<Outcome, CliError> {
    let g = group(spec)?;
    let law = resolve_law(law)?;
    let exhaustive = || check_law_exhaustive(&g, &law, scan.budget);
    let v = match scan.mode {
        Mode::Exhaustive => exhaustive().map_err(input)?,
        Mode::Sampled => check_law_sampled(&g, &law, scan.samples, scan.seed),
        Mode::Auto => exhaustive().unwrap_or_else(|_| check_law_sampled(&g, &law, scan.samples, scan.seed)),
    };
    Ok(verdict_outcome(format!("law: {law}"), &v))
}

fn magma_check(d: &DoubleMagma, budget: u64) -> Result<Outcome, CliError> {
    let name = |e: dimagma_core::Elem| d.names()[e.index()].clone();
    let audit = d.eckmann_hilton_audit(budget).map_err(input)?;
    let mut out = String::new();
    let _ = writeln!(out, "order: {}", d.order());
    let _ = writeln!(out, "interchange: {}", audit.interchange);
    let _ = match d.proper_witness() {
        Some((x, y)) => writeln!(out, "proper: true (differ at {},{})", name(x), name(y)),
        None => writeln!(out, "proper: false"),
    };
    for (label, m) in [("star", d.star()), ("bullet", d.bullet())] {
        let _ = writeln!(out, "{label} commutative: {}", m.is_commutative());
        let _ = writeln!(out, "{label} associative: {}", m.is_associative());
        let _ = writeln!(out, "{label} identity: {}", m.find_identity().map_or_else(|| "none".into(), name));
    }
    if let Some(c) = &audit.conclusions {
        let _ = writeln!(
            out,
            "both unital; identities coincide: {}, operations coincide: {}",
            c.identities_coincide, c.operations_coincide
        );
    }
    Ok(Outcome { stdout: out, success: audit.interchange.holds() })
}

fn ring_inspect(spec: &str) -> Result<Outcome, CliError> {
    let r = ring(spec)?;
    let mut out = String::new();
    let _ = writeln!(out, "order: {}", r.order());
    let _ = writeln!(out, "commutative: {}", r.is_commutative());
    let _ = match r.proper_witness() {
        Some((x, y)) => writeln!(out, "proper witness: x={} y={}", r.name(x), r.name(y)),
        None => writeln!(out, "proper witness: none"),
    };
    Ok(Outcome::ok(out))
}

fn ring_check(spec: &str, law: &str, scan: &ScanArgs) -> Result<Outcome, CliError> {
    let r = ring(spec)?;
    let law = RingLaw::parse(law).map_err(input)?;
    let exhaustive = || r.check_law(law, scan.budget);
    let v = match scan.mode {
        Mode::Exhaustive => exhaustive().map_err(input)?,
        Mode::Sampled => r.check_law_sampled(law, scan.samples, scan.seed),
        Mode::Auto => exhaustive().unwrap_or_else(|_| r.check_law_sampled(law, scan.samples, scan.seed)),
    };
    Ok(verdict_outcome(format!("law: {law}"), &v))
}

pub fn load_config(path: Option<&Path>) -> Result<CorpusConfig, CliError> {
    let text = match path {
        Some(p) => fs::read_to_string(p).map_err(|source| CliError::File { path: p.into(), source })?,
        None => DEFAULT_CONFIG.into(),
    };
    Ok(toml::from_str(&text)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::File { path: path.into(), source })
}

fn suite_run(args: &SuiteArgs) -> Result<Outcome, CliError> {
    let mut config = load_config(args.config.as_deref())?;
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if !args.checks.is_empty() {
        config.checks = args
            .checks
            .iter()
            .map(|c| CheckId::parse(c).ok_or_else(|| input(format!("unknown check {c:?}"))))
            .collect::<Result<_, _>>()?;
    }
    let started = Instant::now();
    let report = run_corpus(&config).map_err(input)?;
    eprintln!("suite finished in {:.2?}", started.elapsed());
    let text = report::to_text(&report);
    let json = report::to_json(&report)?;
    if let Some(p) = &args.json_out {
        write_file(p, &json)?;
    }
    if let Some(p) = &args.text_out {
        write_file(p, &text)?;
    }
    let stdout = if args.json { json } else { text };
    Ok(Outcome { stdout, success: report.passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_config_is_the_default_corpus() {
        assert_eq!(load_config(None).unwrap(), CorpusConfig::default_corpus());
    }

    #[test]
    fn unknown_construction() {
        assert!(matches!(build_double("cyclic:3", "twisted"), Err(CliError::Input(_))));
        assert!(build_double("zmod:4", "ring-commutator").is_ok());
        assert!(build_double("cyclic:3", "word:a b^-1").is_ok());
    }
}
