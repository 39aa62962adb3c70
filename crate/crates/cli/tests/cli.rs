use std::process::{Command, Output};

use serde_json::{json, Value};

fn tgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tgp")).args(args).output().expect("binary runs")
}

fn outputs(args: &[&str]) -> Value {
    let out = tgp(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    report["outputs"].clone()
}

#[test]
fn kostka_examples() {
    assert_eq!(outputs(&["kostka", "--shape", "2,2", "--content", "1,1,1,1", "--modified"]), json!({"2": 1, "4": 1}));
    assert_eq!(outputs(&["kostka", "--shape", "3", "--content", "3"]), json!(1));
    assert_eq!(outputs(&["kostka", "--shape", "2,2", "--content", "3,1"]), json!(0));
}

#[test]
fn dim_examples() {
    assert_eq!(outputs(&["dim", "--lambda", "2,1", "--params", "1,1"]), json!({"dim": 3, "d_lambda": 3, "flat": true}));
    assert_eq!(outputs(&["dim", "--lambda", "4"])["dim"], json!(24));
    assert_eq!(outputs(&["dim", "--lambda", "1,1,1"])["dim"], json!(1));
    assert_eq!(outputs(&["dim", "--lambda", "3,1", "--params", "5,5,7"])["dim"], json!(12));
    assert_eq!(outputs(&["dim", "--lambda", "2,1", "--params", "-1,1/2"])["flat"], json!(true));
}

#[test]
fn gchar_examples() {
    let two = outputs(&["gchar", "--lambda", "2"]);
    assert_eq!(two["graded_character"], json!({"0": {"(2)": 1}, "1": {"(1,1)": 1}}));
    let one_one = outputs(&["gchar", "--lambda", "1,1"]);
    assert_eq!(one_one["graded_character"], json!({"0": {"(2)": 1}}));
    let four = outputs(&["gchar", "--lambda", "4"]);
    assert_eq!(four["match"], json!(true));
    assert_eq!(four["graded_character"]["6"], json!({"(1,1,1,1)": 1}));
    assert_eq!(four["graded_character"]["2"], json!({"(3,1)": 1, "(2,2)": 1}));
}

#[test]
fn cocharge_and_char() {
    assert_eq!(outputs(&["cocharge", "--word", "422311123"])["cocharge"], json!(6));
    assert_eq!(outputs(&["cocharge", "--word", "4 2 2 3 1 1 1 2 3"])["cocharge"], json!(6));
    let ch = outputs(&["char", "--lambda", "2,1", "--params", "1,2"]);
    assert_eq!(ch["character"], json!({"(3)": 1, "(2,1)": 1}));
}

#[test]
fn tanisaki_counts() {
    assert_eq!(outputs(&["tanisaki", "--lambda", "2,1", "--params", "1,1"])["count"], json!(6));
    assert_eq!(outputs(&["tanisaki", "--lambda", "2,1", "--params", "1,1", "--reduced"])["count"], json!(5));
    let gens = outputs(&["tanisaki", "--lambda", "2"]);
    assert_eq!(gens["generators"][0]["poly"], json!("t1 + t2"));
}

#[test]
fn schur_weyl_and_split() {
    let sw = outputs(&["schur-weyl", "--lambda", "2,1", "--n", "3", "--params", "1,1"]);
    assert_eq!(sw["weyl_module"], json!({"rank": 3, "(2,1)": 1, "(1,1,1)": 1}));
    assert_eq!(sw["match"], json!(true));
    let split = outputs(&["split-check", "--lambda", "3,2", "--params", "1,1,4"]);
    assert_eq!(split["dim"], json!(30));
    assert_eq!(split["character_match"], json!(true));
}

#[test]
fn rep_matrices_and_example() {
    let rep = outputs(&["rep-matrices", "--lambda", "2,1", "--params", "2,2", "--amended"]);
    assert_eq!(rep["relations_hold"], json!(true));
    assert_eq!(rep["dim"], json!(3));
    let generic = outputs(&["example6", "--a", "1", "--b", "2"]);
    assert_eq!(generic["module"]["irreducible"], json!(true));
    assert_eq!(generic["module"]["dim"], json!(3));
    let limit = outputs(&["example6", "--a", "1", "--b", "1"]);
    assert_eq!(limit["m0_splits"], json!(true));
    assert_eq!(limit["m1"]["splits"], json!(false));
    assert_eq!(limit["m2_socle_is_sign"], json!(true));
    let same = outputs(&["example6", "--a", "2", "--b", "2"]);
    assert_eq!(same["m1"], same["quotient"]);
}

#[test]
fn suite_runs() {
    let small = outputs(&["suite", "--max-d", "1"]);
    assert_eq!(small["failed"], json!(0));
    let four = outputs(&["suite", "--max-d", "4", "--trials", "3", "--seed", "7"]);
    assert_eq!(four["failed"], json!(0));
    assert!(four["total"].as_u64().unwrap() > 500);
}

#[test]
fn exit_codes() {
    assert_eq!(tgp(&["kostka", "--shape", "2,x", "--content", "3"]).status.code(), Some(2));
    assert_eq!(tgp(&["kostka", "--shape", "2,2", "--content", "3"]).status.code(), Some(3));
    assert_eq!(tgp(&["dim", "--lambda", "2,1", "--params", "1"]).status.code(), Some(3));
    assert_eq!(tgp(&["dim", "--lambda", "2,1", "--params", "1,q"]).status.code(), Some(2));
    assert_eq!(tgp(&["example6", "--a", "0", "--b", "1"]).status.code(), Some(3));
    assert_eq!(tgp(&["schur-weyl", "--lambda", "2,1", "--n", "2"]).status.code(), Some(3));
    assert_eq!(tgp(&["suite", "--max-d", "8"]).status.code(), Some(3));
    assert_eq!(tgp(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["suite", "--max-d", "3", "--trials", "2", "--seed", "11"][..],
        &["flat-check", "--lambda", "2,2", "--seed", "5"][..],
        &["example6", "--a", "3/2", "--b", "-1"][..],
    ] {
        let first = tgp(args);
        let second = tgp(args);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn envelope_and_flags() {
    let out = tgp(&["flat-check", "--lambda", "2,1", "--seed", "9", "--trials", "1"]);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["command"], json!("flat-check"));
    assert_eq!(report["seed"], json!(9));
    assert_eq!(report["inputs"]["lambda"], json!("2,1"));
    assert!(report.get("wall_time_ms").is_none());
    let timed: Value = serde_json::from_slice(&tgp(&["--timing", "dim", "--lambda", "2"]).stdout).unwrap();
    assert!(timed["wall_time_ms"].is_u64());
    let pretty = String::from_utf8(tgp(&["--pretty", "dim", "--lambda", "2"]).stdout).unwrap();
    assert!(pretty.lines().any(|l| l.starts_with("output.dim") && l.trim_end().ends_with('2')));
}

#[test]
fn thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_tgp"))
        .args(["char", "--lambda", "3,1"])
        .env("TGP_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_tgp"))
        .args(["char", "--lambda", "3,1"])
        .env("TGP_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
