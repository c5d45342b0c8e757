//! The nine acceptance criteria, one pass/fail line each.
//!
//! Runs without the libtest harness so the lines are always printed. Exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use vbw::cli::{run_suite, SuiteOptions, SuiteReport, MAX_UNKNOWN_RATE};
use vbw::homsearch::{classify_sym_to_sym, classify_vb_to_sym, ClassReport, SearchOptions, Tag};
use vbw::perm::Permutation;

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn involutions(m: usize) -> usize {
    Permutation::all(m)
        .iter()
        .filter(|p| !p.is_identity() && p.compose(p).unwrap().is_identity())
        .count()
}

/// `Σ |C(t)|` over `t² = 1`: the Abelian homomorphisms `VB_n → S_m`
/// (`σ_i ↦ g`, `τ_i ↦ t`, `gt = tg`).
fn abelian_vb_homs(m: usize) -> u64 {
    let all = Permutation::all(m);
    let mut total = 0;
    for t in all.iter().filter(|t| t.compose(t).unwrap().is_identity()) {
        total += all.iter().filter(|g| g.commutes_with(t)).count() as u64;
    }
    total
}

fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

fn tag_counts(r: &ClassReport) -> BTreeMap<Tag, usize> {
    let mut c = BTreeMap::new();
    for x in &r.classes {
        *c.entry(x.tag).or_default() += 1;
    }
    c
}

fn within(started: Instant, limit: Duration) -> bool {
    started.elapsed() <= limit
}

fn criterion1() -> Outcome {
    let opts = SearchOptions::default();
    let mut notes = Vec::new();
    let mut pass = true;
    for m in 2..=5 {
        let t = Instant::now();
        let r = classify_sym_to_sym(5, m, &opts).expect("classify");
        let c = tag_counts(&r);
        let abelian = 1 + vbw::perm::involution_class_reps(m).len();
        let mut expected = BTreeMap::from([(Tag::Abelian, abelian)]);
        let mut raw = 1 + involutions(m) as u64;
        if m == 5 {
            expected.insert(Tag::Identity, 1);
            raw += factorial(5);
        }
        let ok = c == expected && r.raw_count == raw && r.certified && within(t, Duration::from_secs(60));
        pass &= ok;
        notes.push(format!("m={m}: {} classes, {} homs, {:?}", r.classes.len(), r.raw_count, t.elapsed()));
    }
    Outcome { pass, detail: notes.join("; ") }
}

fn criterion2() -> Outcome {
    let t = Instant::now();
    let r = classify_sym_to_sym(6, 6, &SearchOptions { jobs: 4, budget: None }).expect("classify");
    let expected = BTreeMap::from([(Tag::Abelian, 4), (Tag::Identity, 1), (Tag::Nu6, 1)]);
    // trivial, 75 involutions, 1440 automorphisms
    let raw = 1 + involutions(6) as u64 + 2 * factorial(6);
    Outcome {
        pass: tag_counts(&r) == expected && r.raw_count == raw && r.certified && within(t, Duration::from_secs(1800)),
        detail: format!("{:?}, {} homs, {:?}", tag_counts(&r), r.raw_count, t.elapsed()),
    }
}

fn criterion3() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for m in 2..=5 {
        let t = Instant::now();
        let r = classify_vb_to_sym(5, m, &SearchOptions { jobs: 4, budget: None }).expect("classify");
        let c = tag_counts(&r);
        let mut raw = abelian_vb_homs(m);
        let mut named = vec![];
        if m == 5 {
            raw += 2 * factorial(5);
            named = vec![Tag::PiK, Tag::PiP];
        }
        let ok = r.raw_count == raw
            && named.iter().all(|t| c.get(t) == Some(&1))
            && c.keys().all(|t| *t == Tag::Abelian || named.contains(t))
            && r.certified
            && within(t, Duration::from_secs(600));
        pass &= ok;
        notes.push(format!("m={m}: {:?}, {} homs, {:?}", c, r.raw_count, t.elapsed()));
    }
    // the (6, 6) stretch run, under an explicit node budget
    let t = Instant::now();
    match classify_vb_to_sym(6, 6, &SearchOptions { jobs: 4, budget: Some(50_000_000) }) {
        Ok(r) => {
            let c = tag_counts(&r);
            let named = [Tag::PiK, Tag::PiP, Tag::Nu6PiK, Tag::Nu6PiP];
            let ok = r.raw_count == abelian_vb_homs(6) + 4 * factorial(6)
                && named.iter().all(|t| c.get(t) == Some(&1))
                && c.keys().all(|t| *t == Tag::Abelian || named.contains(t));
            pass &= ok;
            notes.push(format!("stretch (6,6): {:?}, {:?}", c, t.elapsed()));
        }
        Err(e) => notes.push(format!("stretch (6,6) not completed: {e}")),
    }
    Outcome { pass, detail: notes.join("; ") }
}

fn suites(names: &[&str], limit: Duration, max_unknown: f64) -> Outcome {
    let t = Instant::now();
    let reports: Vec<SuiteReport> = names
        .iter()
        .map(|s| run_suite(s, &SuiteOptions::default()).expect("suite"))
        .collect();
    let elapsed = t.elapsed();
    let pass = reports.iter().all(|r| r.ok(max_unknown)) && elapsed <= limit;
    let detail = reports
        .iter()
        .map(|r| format!("{}: {}/{}/{} pass/fail/unknown", r.suite, r.passed, r.failed, r.unknown))
        .chain(std::iter::once(format!("{elapsed:?}")))
        .collect::<Vec<_>>()
        .join("; ");
    for r in &reports {
        for c in r.cases.iter().filter(|c| c.outcome != vbw::cli::Outcome::Pass).take(3) {
            eprintln!("  {} {} {:?} {}", r.suite, c.name, c.outcome, c.detail);
        }
    }
    Outcome { pass, detail }
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1 sym5 -> sym2..sym5 catalog", Box::new(criterion1)),
        ("2 sym6 -> sym6 catalog", Box::new(criterion2)),
        ("3 vb5 -> sym2..sym5 catalog", Box::new(criterion3)),
        ("4 relation suite", Box::new(|| suites(&["relations"], Duration::from_secs(10), 0.0))),
        ("5 catalog suite", Box::new(|| suites(&["catalog", "nu6"], Duration::from_secs(1), 0.0))),
        ("6 normal-form suite", Box::new(|| suites(&["normalform"], Duration::from_secs(30), 0.0))),
        (
            "7 constructive round-trips",
            Box::new(|| suites(&["lemma3_8", "lemma3_9", "lemma3_11"], Duration::from_secs(600), MAX_UNKNOWN_RATE)),
        ),
        ("8 dihedral instances", Box::new(|| suites(&["lemma6_0"], Duration::from_secs(5), 0.0))),
        ("9 kbeq soundness fuzz", Box::new(|| suites(&["kbeq_fuzz"], Duration::from_secs(60), 1.0))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!("{} criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
