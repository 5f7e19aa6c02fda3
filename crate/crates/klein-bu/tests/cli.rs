//! End-to-end tests against the built binary: exit codes, output formats,
//! and selftest determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klein-bu"))
        .args(args)
        .env_remove("KLEIN_BU_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn classify_type3_has_property() {
    let out = run(&["classify", "--f10", "(0,0)", "--f01", "(0,1)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("type: 3"));
    assert!(text.contains("borsuk-ulam: true"));
}

#[test]
fn classify_valuation_failure() {
    let out = run(&["classify", "--f10", "(2,2)", "--f01", "(4,0)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("type: 4"));
    assert!(text.contains("reason: NotBU-Type4-ValuationFail"));
}

#[test]
fn classify_exit_codes() {
    let out = run(&["classify", "--f10", "(1,1)", "--f01", "(1,0)"]);
    assert_eq!(out.status.code(), Some(2), "non-homomorphism exits 2");
    assert!(stderr(&out).contains("do not commute"));

    let out = run(&["classify", "--f10", "nonsense", "--f01", "(0,1)"]);
    assert_eq!(out.status.code(), Some(1), "parse failure exits 1");
}

#[test]
fn witness_text_output() {
    let out = run(&["witness", "--f10", "(0,1)", "--f01", "(0,0)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("a = (v; 0, 0)"));
    assert!(text.contains("b = (1; 0, 0)"));
    assert!(text.contains("verified: true"));

    let out = run(&["witness", "--f10", "(0,0)", "--f01", "(0,1)"]);
    assert!(stdout(&out).contains("status: NotApplicableBU"));
}

#[test]
fn witness_json_round_trip() {
    let out = run(&["witness", "--f10", "(3,2)", "--f01", "(6,0)", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(format!("{v}\n"), text, "JSON round-trips byte-identically");
    assert_eq!(v["type"], 4);
    assert_eq!(v["status"], "Generated");
    assert_eq!(v["verified"], true);
}

#[test]
fn verify_witness_command() {
    let out = run(&[
        "verify-witness",
        "--f10",
        "(1,0)",
        "--f01",
        "(1,0)",
        "--a",
        "(u; 0, 0)",
        "--b",
        "(B^-1; 1, 0)",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verified: true"));
}

#[test]
fn rewrite_and_abelianize() {
    let out = run(&["rewrite", "B"]);
    assert_eq!(stdout(&out), "B[0,0]\n");

    let out = run(&["rewrite", "v B v^-1"]);
    assert_eq!(stdout(&out), "B[1,0]\n");

    let out = run(&["rewrite", "u"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("g=(1,0)"));

    let out = run(&["abelianize", "v^2 u v^-2 u^-1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v,
        serde_json::json!([{ "c": -1, "k": 0, "l": 0 }, { "c": 1, "k": 1, "l": -1 }])
    );
}

#[test]
fn eval_command() {
    let out = run(&["eval", "lsigma (B; 0, 0)"]);
    assert_eq!(stdout(&out), "(u v u v^-1; 0, 0)\n");

    let out = run(&["eval", "theta[0,1] v"]);
    assert_eq!(stdout(&out), "v u v u v^-1\n");

    let out = run(&["eval", "mul (u; 0, 0) oops"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn selftest_small_run_is_deterministic() {
    let args = &["selftest", "--seed", "7", "--cases", "5"];
    let a = run(args);
    assert!(a.status.success(), "selftest failed: {}", stdout(&a));
    let b = run(args);
    assert_eq!(stdout(&a), stdout(&b), "byte-identical reports");
    assert!(stdout(&a).contains("all suites passed"));
    assert!(stdout(&a).contains("seed=7 cases=5"));
}

#[test]
fn selftest_seed_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_klein-bu"))
        .args(["selftest", "--cases", "2"])
        .env("KLEIN_BU_SEED", "99")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert!(stdout(&out).contains("seed=99"));
}
