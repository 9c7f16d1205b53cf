use std::process::{Command, Output};

use gl3_hc::highest::{hc, HcQuery};
use gl3_hc::izergin::{Kernel, Side};
use gl3_hc::{ParameterSet, Rational};

fn gl3hc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gl3hc")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn set(s: &str) -> ParameterSet {
    s.parse().unwrap()
}

#[test]
fn izergin_single_entry_is_g() {
    let out = gl3hc(&["izergin", "--x", "3", "--y", "1", "--q", "2"]);
    assert_eq!(stdout(&out).trim(), "3/4");
    let left = gl3hc(&["izergin", "--variant", "left", "--x", "3", "--y", "1", "--q", "2"]);
    assert_eq!(stdout(&left).trim(), "9/4");
}

#[test]
fn izergin_matches_library() {
    let k = Kernel::new(&r("2")).unwrap();
    let expected = k.izergin_right(&set("1,2"), &set("3,5")).unwrap();
    let out = gl3hc(&["izergin", "--variant", "right", "--x", "1,2", "--y", "3,5", "--q", "2"]);
    assert_eq!(stdout(&out).trim(), expected.to_string());
}

#[test]
fn izergin_collision_is_an_error() {
    let out = gl3hc(&["izergin", "--x", "3", "--y", "3", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("pole"));
}

#[test]
fn hc_all_representations_agree() {
    let args = ["hc", "--side", "r", "--rep", "all", "--t", "3,1/2", "--x", "5,7/3", "--s", "11", "--y", "13/5", "--q", "2"];
    let text = stdout(&gl3hc(&args));
    let mut lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines.pop(), Some("agree: true"));
    let expected = hc(&HcQuery::new(Side::R, set("3,1/2"), set("5,7/3"), set("11"), set("13/5"), r("2"))).unwrap();
    for line in lines {
        let (_, value) = line.split_once(": ").unwrap();
        assert_eq!(value, expected.to_string(), "{line}");
    }
}

#[test]
fn hc_accepts_empty_sets() {
    let out = gl3hc(&["hc", "--t", "", "--x", "", "--s", "", "--y", "", "--q", "-3/2"]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn hc_rejects_unknown_rep() {
    let out = gl3hc(&["hc", "--rep", "nope", "--t", "", "--x", "", "--s", "", "--y", "", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scalar_product_symbolic_a1_b0() {
    let args = ["scalar-product", "--uc", "2", "--vc", "", "--ub", "5", "--vb", "", "--q", "3", "--symbolic"];
    let text = stdout(&gl3hc(&args));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().any(|l| l.starts_with("R1(uC1): ")));
    assert!(lines.iter().any(|l| l.starts_with("R1(uB1): ")));
}

#[test]
fn scalar_product_numeric_with_zero_functions_is_constant_term() {
    let base = ["scalar-product", "--uc", "2", "--vc", "7", "--ub", "5", "--vb", "3/4", "--q", "3"];
    let symbolic = stdout(&gl3hc(&[&base[..], &["--symbolic"]].concat()));
    let constant = symbolic.lines().find_map(|l| l.strip_prefix("1: ")).map(str::to_string).unwrap_or_else(|| "0".into());
    let zero = "num:0;den:1";
    let numeric = stdout(&gl3hc(&[&base[..], &["--r1", zero, "--r3", zero]].concat()));
    assert_eq!(numeric.trim(), constant);
}

#[test]
fn scalar_product_numeric_needs_functions() {
    let out = gl3hc(&["scalar-product", "--uc", "2", "--vc", "", "--ub", "5", "--vb", "", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_unknown_suite_fails() {
    let out = gl3hc(&["verify", "--suite", "nonsense", "--trials", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = gl3hc(&[
        "verify", "--suite", "twins", "--a-max", "1", "--b-max", "1", "--trials", "2", "--seed", "5", "--q", "5/2", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "twins");
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["cases"][0]["params"]["q"], "5/2");
}

#[test]
fn verify_is_deterministic() {
    let run = || {
        let text = stdout(&gl3hc(&["verify", "--suite", "scalar", "--a-max", "1", "--b-max", "1", "--trials", "2", "--seed", "9"]));
        let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
        for c in v["cases"].as_array_mut().unwrap() {
            c["elapsed_ms"] = 0.into();
        }
        v
    };
    assert_eq!(run(), run());
}
