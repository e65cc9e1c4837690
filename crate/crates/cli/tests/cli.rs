//! End-to-end tests against the built binary: exit codes, JSON shapes, and
//! the word-grammar round trip of every printed word.

use std::process::{Command, Output};

use serde_json::Value;
use vsb_core::words::Word;

fn vsb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vsb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn perm_composes_per_the_stacking_convention() {
    let out = vsb(&["perm", "-n", "3", "s1 v2"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["cycles"], "(1 2 3)");
    assert_eq!(v["images"], serde_json::json!([2, 3, 1]));
}

#[test]
fn relations_words_reparse() {
    let out = vsb(&["relations", "--catalog", "fusing", "-n", "3"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    let arr = v.as_array().expect("array of relations");
    assert!(!arr.is_empty());
    for rel in arr {
        for side in ["lhs", "rhs"] {
            let text = rel[side].as_str().unwrap();
            let parsed = Word::parse(text, 3).expect("relation word parses");
            assert_eq!(parsed.to_string(), text);
        }
    }
}

#[test]
fn equal_finds_the_singular_twist() {
    let out = vsb(&[
        "equal", "--catalog", "standard", "-n", "2", "--depth", "1", "s1 t1", "t1 s1",
    ]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["verdict"], "equivalent");
    assert_eq!(v["steps"], 1);
    assert_eq!(v["trace"][0]["family"], "RS1");
}

#[test]
fn equal_reports_unknown_with_fingerprint_certificate() {
    let out = vsb(&[
        "equal",
        "--catalog",
        "standard",
        "-n",
        "2",
        "--depth",
        "2",
        "--max-states",
        "500",
        "s1",
        "t1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_stdout(&out);
    assert_eq!(v["verdict"], "unknown");
    assert_eq!(v["rep_check"]["distinguished"], true);
}

#[test]
fn verify_passes_and_reports_families() {
    let out = vsb(&["verify", "--catalog", "standard", "-n", "3", "--p", "3"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["passed"], true);
    assert!(v["families"].as_array().unwrap().len() >= 8);
    // Thread pool gives the identical report.
    let out2 = vsb(&[
        "verify", "--catalog", "standard", "-n", "3", "--p", "3", "--threads", "4",
    ]);
    assert_eq!(json_stdout(&out2), v);
}

#[test]
fn verify_ops_passes() {
    for p in ["2", "3", "5", "7"] {
        let out = vsb(&["verify-ops", "--p", p]);
        assert!(out.status.success(), "verify-ops failed at p={p}");
        assert_eq!(json_stdout(&out)["passed"], true);
    }
}

#[test]
fn eval_emits_full_fingerprint() {
    let out = vsb(&["eval", "--p", "3", "-n", "2", "u1"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    let fp = v["fingerprint"].as_array().unwrap();
    assert_eq!(fp.len(), 9);
    // ξ^{1·1} on state (1,1): coefficients ["0","1"].
    let entry = fp
        .iter()
        .find(|e| e["state"] == serde_json::json!([1, 1]))
        .unwrap();
    assert_eq!(entry["scalar"], serde_json::json!(["0", "1"]));
    assert_eq!(entry["image"], serde_json::json!([1, 1]));
}

#[test]
fn translate_and_decompose_round_trip() {
    let out = vsb(&["translate", "--to", "subscript-one", "-n", "3", "s2 t2"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    let text = v["output"].as_str().unwrap();
    let word = Word::parse(text, 3).unwrap();
    assert!(word
        .letters()
        .iter()
        .all(|g| matches!(g, vsb_core::words::Generator::V(_)) || g.index() == Some(1)));

    let out = vsb(&["decompose", "-n", "2", "s1"]);
    let v = json_stdout(&out);
    assert_eq!(v["pure"], "u[1,2]");
    assert_eq!(v["representative"], "v1");
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(vsb(&["perm", "-n", "3", "x9"]).status.code(), Some(2));
    assert_eq!(vsb(&["perm", "-n", "2", "s2"]).status.code(), Some(2));
    assert_eq!(
        vsb(&["verify", "--catalog", "nonsense", "-n", "3", "--p", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(vsb(&["no-such-command"]).status.code(), Some(2));
    // Non-pure input to rewrite-pure is an input error.
    assert_eq!(vsb(&["rewrite-pure", "-n", "2", "s1"]).status.code(), Some(2));
    // Non-prime p.
    assert_eq!(
        vsb(&["eval", "--p", "4", "-n", "2", "s1"]).status.code(),
        Some(2)
    );
}

#[test]
fn rewrite_pure_matches_the_table() {
    let out = vsb(&["rewrite-pure", "-n", "2", "s1 S1"]);
    assert!(out.status.success());
    assert_eq!(json_stdout(&out)["rewritten"], "u[1,2] U[1,2]");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["relations", "--catalog", "pure", "-n", "4"],
        vec!["verify", "--catalog", "reduced-fusing", "-n", "4", "--p", "3"],
        vec!["equal", "--catalog", "fusing", "-n", "3", "u1 v1 g1", "g1 v1 u1"],
    ] {
        let a = vsb(&args);
        let b = vsb(&args);
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
    }
}

#[test]
fn text_format_renders() {
    let out = vsb(&["verify-ops", "--p", "3", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() >= 7);
    assert!(text.contains("condition 7: ok"));
}
