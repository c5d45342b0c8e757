//! Command-line front end: argument parsing, JSON reports and exit codes.
//!
//! Exit codes: `0` success, `1` verification failure, `2` usage or parse
//! error, `3` budget exhausted or an undecided certification step.

pub mod suites;

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::homsearch::{classify, FinitePresentation, SearchOptions};
use crate::kbeq::{self, EqVerdict};
use crate::vb::catalog::{CatalogHom, Source};
use crate::vb::semidirect::to_semidirect;
use crate::vb::word::{KbWord, VbWord};

pub use suites::{run_suite, Outcome, SuiteOptions, SuiteReport, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

/// Largest Unknown rate a verification suite may report and still pass.
pub const MAX_UNKNOWN_RATE: f64 = 0.10;

/// Environment variable overriding the default rewriting budget.
pub const BUDGET_ENV: &str = "VBW_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "vbw", version, about = "Exact computation in virtual braid groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rewrite a VB_n word as (KB_n word, permutation).
    Normalize {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Apply a catalog homomorphism such as piK, zeta1 or nu6.piP.
    Eval {
        #[arg(long)]
        hom: String,
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Decide equality of two KB_n words.
    KbEq {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        budget: Option<u64>,
        u: String,
        v: String,
    },
    /// Classify homomorphisms into S_m up to conjugation.
    Classify {
        /// symK or vbK
        #[arg(long)]
        from: String,
        /// symM
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Cap on search nodes.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run a verification suite, or `all`.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Randomized cases per check instead of the nominal count.
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub verdict: String,
    pub timing_ms: u64,
    pub version: String,
}

/// Default rewriting budget, honouring `VBW_BUDGET`.
pub fn default_budget() -> Result<u64> {
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{BUDGET_ENV}={s:?} is not an integer"))),
        Err(_) => Ok(kbeq::DEFAULT_BUDGET),
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::IndexOutOfRange(_) | Error::DegreeMismatch { .. } | Error::DegreeTooLarge { .. } => {
            EXIT_USAGE
        }
        Error::Unknown(_) | Error::BudgetExceeded(_) => EXIT_UNDECIDED,
        _ => EXIT_FAILURE,
    }
}

fn target_degree(text: &str) -> Result<usize> {
    match Source::parse(text)? {
        Source::Sym(m) => Ok(m),
        Source::Vb(_) => Err(Error::Parse(format!("target must be symM, got {text:?}"))),
    }
}

/// Runs one command and returns `(inputs, outputs, verdict, exit code)`.
fn execute(cmd: &Command) -> Result<(Value, Value, String, i32)> {
    match cmd {
        Command::Normalize { n, word } => {
            let w = VbWord::parse(word, *n)?;
            let x = to_semidirect(&w);
            let out = json!({"kb": x.kb, "perm": x.perm.one_line()});
            Ok((json!({"n": n, "word": word}), out, "ok".into(), EXIT_OK))
        }
        Command::Eval { hom, n, word } => {
            let h = CatalogHom::by_name(hom, *n)?;
            let w = VbWord::parse(word, h.source.degree())?;
            let v = h.eval(&w)?;
            let out = json!({"hom": h.name, "target": h.target, "value": v});
            Ok((json!({"hom": hom, "n": n, "word": word}), out, "ok".into(), EXIT_OK))
        }
        Command::KbEq { n, budget, u, v } => {
            let budget = match budget {
                Some(b) => *b,
                None => default_budget()?,
            };
            let (a, b) = (KbWord::parse(u, *n)?, KbWord::parse(v, *n)?);
            let verdict = kbeq::kb_equal(&a, &b, budget)?;
            let code = match verdict {
                EqVerdict::Unknown { .. } => EXIT_UNDECIDED,
                _ => EXIT_OK,
            };
            let inputs = json!({"n": n, "budget": budget, "u": u, "v": v});
            Ok((inputs, serde_json::to_value(&verdict).expect("serializable"), verdict.outcome().into(), code))
        }
        Command::Classify { from, to, jobs, budget } => {
            let p = match Source::parse(from)? {
                Source::Sym(k) => FinitePresentation::symmetric(k),
                Source::Vb(k) => FinitePresentation::virtual_braid(k),
            };
            let m = target_degree(to)?;
            let opts = SearchOptions {
                jobs: (*jobs).max(1),
                budget: *budget,
            };
            let r = classify(&p, m, &opts)?;
            let (verdict, code) = match r.catalog_match {
                Some(true) => ("certified", EXIT_OK),
                Some(false) => ("mismatch", EXIT_FAILURE),
                None => ("uncatalogued", EXIT_OK),
            };
            let inputs = json!({"from": from, "to": to, "jobs": jobs, "budget": budget});
            Ok((inputs, serde_json::to_value(&r).expect("serializable"), verdict.into(), code))
        }
        Command::Verify {
            suite,
            seed,
            cases,
            budget,
        } => {
            let opts = SuiteOptions {
                seed: *seed,
                cases: *cases,
                budget: match budget {
                    Some(b) => *b,
                    None => default_budget()?,
                },
            };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports = Vec::new();
            for name in names {
                reports.push(run_suite(name, &opts)?);
            }
            let code = if reports.iter().any(|r| r.failed > 0) {
                EXIT_FAILURE
            } else if reports.iter().any(|r| r.unknown_rate > MAX_UNKNOWN_RATE) {
                EXIT_UNDECIDED
            } else {
                EXIT_OK
            };
            let verdict = match code {
                EXIT_OK => "pass",
                EXIT_FAILURE => "fail",
                _ => "undecided",
            };
            let inputs = json!({"suite": suite, "seed": seed, "cases": cases, "budget": opts.budget});
            Ok((inputs, serde_json::to_value(&reports).expect("serializable"), verdict.into(), code))
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Normalize { .. } => "normalize",
        Command::Eval { .. } => "eval",
        Command::KbEq { .. } => "kb-eq",
        Command::Classify { .. } => "classify",
        Command::Verify { .. } => "verify",
    }
}

fn summary(outputs: &Value) -> Option<String> {
    let reports = outputs.as_array()?;
    let lines: Vec<String> = reports
        .iter()
        .map(|r| {
            format!(
                "{}: {} passed, {} failed, {} unknown",
                r["suite"].as_str().unwrap_or("?"),
                r["passed"],
                r["failed"],
                r["unknown"]
            )
        })
        .collect();
    Some(lines.join("\n"))
}

/// Parses `argv` (including the program name), writes the JSON report to
/// `out` and a human summary to `err`, and returns the exit code.
pub fn dispatch<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let started = Instant::now();
    let name = command_name(&cli.command);
    match execute(&cli.command) {
        Ok((inputs, outputs, verdict, code)) => {
            let text = summary(&outputs).filter(|_| name == "verify");
            let report = Report {
                command: name.into(),
                inputs,
                outputs,
                verdict: verdict.clone(),
                timing_ms: started.elapsed().as_millis() as u64,
                version: env!("CARGO_PKG_VERSION").into(),
            };
            let _ = writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"));
            if let Some(t) = text {
                let _ = writeln!(err, "{t}");
            }
            let _ = writeln!(err, "{name}: {verdict}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "vbw {name}: {e}");
            exit_code_for(&e)
        }
    }
}
