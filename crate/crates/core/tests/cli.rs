use std::process::{Command, Output};

use serde_json::Value;

fn vbw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vbw"))
        .args(args)
        .env_remove("VBW_BUDGET")
        .output()
        .expect("run vbw")
}

fn report(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn normalize_example() {
    let o = vbw(&["normalize", "--n", "4", "t1 s1"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["command"], "normalize");
    assert_eq!(r["outputs"]["kb"], "d2.1");
    assert_eq!(r["outputs"]["perm"], serde_json::json!([2, 1, 3, 4]));
    for key in ["inputs", "outputs", "verdict", "timing_ms", "version"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn eval_example() {
    let o = vbw(&["eval", "--hom", "piP", "--n", "4", "t1 s2 t1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(report(&o)["outputs"]["value"], serde_json::json!([3, 2, 1, 4]));
}

#[test]
fn kb_eq_outcomes_and_exit_codes() {
    let o = vbw(&["kb-eq", "--n", "3", "d1.2 d2.3 d1.2", "d2.3 d1.2 d2.3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(report(&o)["outputs"]["outcome"], "equal");

    let o = vbw(&["kb-eq", "--n", "3", "d1.2", "d2.1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(report(&o)["outputs"]["outcome"], "distinct");

    let o = vbw(&["kb-eq", "--n", "3", "--budget", "50", "d2.3 d3.1", "d1.2 d2.3"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(report(&o)["outputs"]["outcome"], "unknown");
}

#[test]
fn budget_env_var_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_vbw"))
        .args(["kb-eq", "--n", "3", "d1.2", "d1.2"])
        .env("VBW_BUDGET", "7")
        .output()
        .unwrap();
    assert_eq!(report(&o)["inputs"]["budget"], 7);
    let o = Command::new(env!("CARGO_BIN_EXE_vbw"))
        .args(["kb-eq", "--n", "3", "d1.2", "d1.2"])
        .env("VBW_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(vbw(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(vbw(&["normalize", "--n", "3", "s7"]).status.code(), Some(2));
    assert_eq!(vbw(&["normalize", "--n", "3", "x1"]).status.code(), Some(2));
    assert_eq!(vbw(&["classify", "--from", "vb5", "--to", "vb5"]).status.code(), Some(2));
    assert_eq!(vbw(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn classify_example_is_certified() {
    let o = vbw(&["classify", "--from", "vb5", "--to", "sym5", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["outputs"]["certified"], true);
    let tags: Vec<&str> = r["outputs"]["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["tag"].as_str().unwrap())
        .filter(|t| *t != "abelian")
        .collect();
    assert_eq!(tags, vec!["piK", "piP"]);
}

#[test]
fn classify_budget_exhaustion_exits_3() {
    let o = vbw(&["classify", "--from", "sym5", "--to", "sym5", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_suite_runs_independently() {
    let o = vbw(&["verify", "--suite", "nu6"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["outputs"][0]["suite"], "nu6");
    assert_eq!(r["outputs"][0]["failed"], 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("nu6:"));
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let strip = |o: &Output| {
        let mut r = report(o);
        r.as_object_mut().unwrap().remove("timing_ms");
        r
    };
    for args in [
        &["verify", "--suite", "lemma3_9", "--cases", "20"][..],
        &["classify", "--from", "sym4", "--to", "sym4", "--jobs", "3"][..],
    ] {
        assert_eq!(strip(&vbw(args)), strip(&vbw(args)));
    }
}
