use std::process::Command;

use serde_json::Value;
use vtl::cli::{run, EXIT_FAILURE, EXIT_GUARD, EXIT_OK, EXIT_USAGE};

fn vtl(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args.iter().copied(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = vtl(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn invariant_text_output() {
    let (code, out, _) = vtl(&["invariant", "-n", "2", "s1 s1 s1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "f: A^-18 - A^-10 - A^-6 - A^-2\narrow: A^-18 - A^-10 - A^-6 - A^-2\n"
    );
    let (_, out, _) = vtl(&["invariant", "-n", "2", "s1", "s1", "t1", "--arrow"]);
    assert_eq!(out, "arrow: (-A^-6 - A^-2) + (-A^-10 + A^-6)*z1\n");
}

#[test]
fn normalized_unknot_is_one() {
    let v = json(&[
        "invariant",
        "-n",
        "1",
        "",
        "--both",
        "--normalized",
        "--json",
    ]);
    let one = serde_json::json!([{"e": 0, "c": "1"}]);
    assert_eq!(v["f"], one);
    assert_eq!(
        v["arrow"],
        serde_json::json!([{"m": [], "p": [{"e": 0, "c": "1"}]}])
    );
    assert_eq!(v["normalized"], true);
}

#[test]
fn json_envelope_fields() {
    let (_, text, _) = vtl(&["invariant", "-n", "3", "s1 t2 s1'", "--json"]);
    let at = |k: &str| text.find(&format!("\"{k}\":")).unwrap();
    let order = ["n", "word", "writhe", "f", "arrow", "normalized"].map(at);
    assert!(order.windows(2).all(|w| w[0] < w[1]), "{text}");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["word"], "s1 t2 s1'");
    assert_eq!(v["writhe"], 0);
    let f_only = json(&["invariant", "-n", "2", "s1", "--f", "--json"]);
    assert!(f_only.get("arrow").is_none());
}

#[test]
fn arrow_normalization_failure_is_reported() {
    let (code, out, err) = vtl(&["invariant", "-n", "2", "s1 s1 t1", "--normalized"]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(out.is_empty());
    assert!(err.contains("not divisible"), "{err}");
    let (code, out, _) = vtl(&["invariant", "-n", "2", "s1 s1 t1", "--normalized", "--f"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "f: -A^-10 + A^-6 + A^-4\n");
}

#[test]
fn usage_errors() {
    for args in [
        &["invariant", "-n", "2", "s3"][..],
        &["invariant", "-n", "2", "x1"],
        &["invariant", "-n", "2", "t1'"],
        &["invariant", "-n", "2", "s1", "--f", "--arrow"],
        &["check", "--suite", "nope"],
        &["check", "--suite", "derived", "--max-n", "0"],
        &["frobnicate"],
        &[],
    ] {
        let (code, _, err) = vtl(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = vtl(&["--help"]);
    assert_eq!(code, EXIT_OK);
    for sub in ["invariant", "check", "fuzz", "oracle"] {
        assert!(out.contains(sub));
    }
}

#[test]
fn check_reports() {
    let (code, out, _) = vtl(&["check", "--suite", "presentation-vtl", "--max-n", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("presentation-vtl: pass ("), "{out}");
    let v = json(&["check", "--suite", "derived", "--max-n", "3", "--json"]);
    assert_eq!(v["failed"], 0);
    assert!(v["checked"].as_u64().unwrap() > 0);
}

#[test]
fn enumeration_guard() {
    for suite in ["markov-f", "parity"] {
        let (code, _, err) = vtl(&["check", "--suite", suite, "--max-n", "7"]);
        assert_eq!(code, EXIT_GUARD, "{suite}");
        assert!(err.contains("max-n"));
    }
}

#[test]
fn oracle_guard() {
    let word = "s1 ".repeat(25);
    let (code, _, err) = vtl(&["oracle", "-n", "2", &word]);
    assert_eq!(code, EXIT_GUARD);
    assert!(err.contains("exceed"));
}

#[test]
fn oracle_compare() {
    let v = json(&["oracle", "-n", "2", "s1 t1", "--compare"]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["states"], 2);
    let v = json(&["oracle", "-n", "2", "s1 s1 s1", "--f"]);
    assert!(v.get("agree").is_none());
    assert_eq!(
        serde_json::from_value::<vtl::LaurentPoly>(v["f"].clone())
            .unwrap()
            .to_string(),
        "A^-18 - A^-10 - A^-6 - A^-2"
    );
}

#[test]
fn fuzz_is_deterministic() {
    let args = ["fuzz", "--words", "10", "--seed", "7", "--json"];
    let a = json(&args);
    assert_eq!(a, json(&args));
    assert_eq!(a["failed"], 0);
}

#[test]
fn binary_thread_control() {
    let bin = env!("CARGO_BIN_EXE_vtl");
    let run_with = |threads: &str| {
        Command::new(bin)
            .args(["oracle", "-n", "3", "s1 s2' t1 s1 s2 t2 s1'", "--compare"])
            .env("VTL_THREADS", threads)
            .output()
            .unwrap()
    };
    let seq = run_with("0");
    let par = run_with("3");
    assert!(seq.status.success());
    assert_eq!(seq.stdout, par.stdout);
    let bad = run_with("many");
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
