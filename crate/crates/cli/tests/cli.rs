use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn coorth(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_coorth"));
    cmd.args(args).env_remove("COORTH_MAX_PATTERNS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = coorth(args, &[]);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

/// No JSON number in the document is a float.
fn assert_exact(v: &Value) {
    match v {
        Value::Number(n) => assert!(n.is_u64() || n.is_i64(), "non-integer number {n}"),
        Value::Array(items) => items.iter().for_each(assert_exact),
        Value::Object(map) => map.values().for_each(assert_exact),
        _ => {}
    }
}

#[test]
fn orthogonal_examples() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "linf2.json", r#"{"kind":"linf","n":2}"#);
    let out = json(&["orthogonal", "--space", s(&space), "--x", "1,1", "--y", "1,-1", "--json"]);
    assert_eq!(out["orthogonal"], true);
    assert_eq!(strings(&out["certificate"]), ["1/2", "1/2"]);
    let zero = json(&["orthogonal", "--space", s(&space), "--x", "1,1", "--y", "0,0", "--json"]);
    assert_eq!(zero["orthogonal"], true);
    assert!(zero["certificate"].is_null());
}

#[test]
fn epsilon_out_of_range_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "linf2.json", r#"{"kind":"linf","n":2}"#);
    let out = coorth(
        &["eps-orthogonal", "--space", s(&space), "--x", "1,0", "--y", "1,1", "--epsilon", "3/2", "--json"],
        &[],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("epsilon out of range"));
    let body: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["error"], "epsilon out of range");
}

#[test]
fn malformed_documents_report_a_location() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{\"kind\": \"l1\",\n \"n\": 2.5}");
    let out = coorth(&["orthogonal", "--space", s(&bad), "--x", "1,0", "--y", "0,1"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("space.n:"), "{err}");
    let syntax = write(&dir, "syntax.json", "{\"kind\": \"l1\",\n \"n\": 2");
    let out = coorth(&["orthogonal", "--space", s(&syntax), "--x", "1,0", "--y", "0,1"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
    let nested = write(&dir, "nested.json", r#"{"kind":"linf-sum","components":[{"kind":"l1","n":2},{"kind":"dual-vertices","functionals":[[1,0.5]]}]}"#);
    let out = coorth(&["orthogonal", "--space", s(&nested), "--x", "1,0,0,0", "--y", "0,1,0,0"], &[]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("space.components[1].functionals[0][1]:"), "{err}");
    let mismatch = write(&dir, "l1.json", r#"{"kind":"l1","n":2}"#);
    let out = coorth(&["orthogonal", "--space", s(&mismatch), "--x", "1,0,0", "--y", "0,1"], &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_anti_on_an_l1_axis() {
    let dir = TempDir::new().unwrap();
    let sub = write(&dir, "axis.json", r#"{"basis":[[1,0]],"space":{"kind":"l1","n":2}}"#);
    let out = json(&["check", "anti", "--subspace", s(&sub), "--json"]);
    assert_eq!(out["anti"], false);
    let d: Vec<i64> = strings(&out["direction"]).iter().map(|x| x.parse().unwrap()).collect();
    assert!(d[0].abs() <= d[1].abs());
}

#[test]
fn check_embed_on_the_diagonal() {
    let dir = TempDir::new().unwrap();
    write(&dir, "linf2.json", r#"{"kind":"linf","n":2}"#);
    let sub = write(&dir, "diag.json", r#"{"basis":[["1","1"]],"space":"linf2.json"}"#);
    let out = json(&["check", "embed", "--subspace", s(&sub), "--json"]);
    assert_eq!(out["embed"]["r"], 1);
    assert_eq!(out["embed"]["isometric_linf_n"], true);
    assert_eq!(out["theorem_check"]["consistent"], true);
}

#[test]
fn check_all_on_the_two_block_example() {
    let dir = TempDir::new().unwrap();
    let pairs = [
        "[1,1,1,1,1,0]",
        "[1,-1,-1,0,0,1]",
        "[1,-1,1,0,0,1]",
        "[1,1,-1,-1,1,0]",
        "[2,0,0,1,1,1]",
        "[-2,0,0,1,-1,-1]",
        "[0,0,0,1,-1,1]",
        "[0,2,0,1,1,-1]",
    ];
    write(&dir, "sum.json", r#"{"kind":"linf-sum","components":[{"kind":"l1","n":3},{"kind":"l1","n":3}]}"#);
    // The eight pair sums are dependent: rejected as a basis, accepted as a spanning list.
    let dependent = write(&dir, "dep.json", &format!(r#"{{"basis":[{}],"space":"sum.json"}}"#, pairs.join(",")));
    assert_eq!(coorth(&["check", "anti", "--subspace", s(&dependent)], &[]).status.code(), Some(2));
    let sub = write(&dir, "y.json", &format!(r#"{{"spanning":[{}],"space":"sum.json"}}"#, pairs.join(",")));
    let out = json(&["check", "all", "--subspace", s(&sub), "--samples", "10", "--json"]);
    assert_eq!(out["dim"], 5);
    assert_eq!(out["strong"], true);
    assert_eq!(out["anti"], true);
    assert_eq!(out["covered"], 16);
    assert_exact(&out);
}

#[test]
fn capacity_exit_code_and_override() {
    let dir = TempDir::new().unwrap();
    let sub = write(&dir, "axis.json", r#"{"basis":[[1,0,0]],"space":{"kind":"l1","n":3}}"#);
    let capped = coorth(&["check", "anti", "--subspace", s(&sub), "--json"], &[("COORTH_MAX_PATTERNS", "0")]);
    assert_eq!(capped.status.code(), Some(3));
    let body: Value = serde_json::from_slice(&capped.stdout).unwrap();
    assert_eq!(body["limit"], 0);
    let all = coorth(&["check", "all", "--subspace", s(&sub), "--json"], &[("COORTH_MAX_PATTERNS", "0")]);
    assert_eq!(all.status.code(), Some(3));
    let body: Value = serde_json::from_slice(&all.stdout).unwrap();
    assert_eq!(body["partial"]["strong"], false);
    let bad = coorth(&["check", "anti", "--subspace", s(&sub)], &[("COORTH_MAX_PATTERNS", "lots")]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn emitted_space_documents_round_trip() {
    let dir = TempDir::new().unwrap();
    let src = write(
        &dir,
        "sum.json",
        r#"{"kind":"linf-sum","components":[{"kind":"l1","n":2},{"kind":"dual-vertices","functionals":[[2,"1/2"],[0,1],["4/2",0]]}]}"#,
    );
    let vertex_set = |p: &Path| -> BTreeSet<Vec<String>> {
        let expanded = json(&["space", "--space", s(p), "--expand", "--json"]);
        expanded["functionals"].as_array().unwrap().iter().map(strings).collect()
    };
    let original = vertex_set(&src);
    for expand in [false, true] {
        let mut args = vec!["space", "--space", s(&src), "--json"];
        if expand {
            args.push("--expand");
        }
        let emitted = json(&args);
        let copy = write(&dir, "copy.json", &emitted.to_string());
        assert_eq!(vertex_set(&copy), original);
    }
}

#[test]
fn probe_output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let sub = write(&dir, "y.json", r#"{"basis":[[1,2,0]],"space":{"kind":"l1","n":3}}"#);
    let args = ["probe", "coproximinal", "--subspace", s(&sub), "--samples", "40", "--seed", "7", "--json"];
    let a = coorth(&args, &[]);
    let b = coorth(&args, &[]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let body: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(body["seed"], 7);
    assert_exact(&body);
}

#[test]
fn query_documents_dispatch() {
    let dir = TempDir::new().unwrap();
    write(&dir, "linf2.json", r#"{"kind":"linf","n":2}"#);
    let q = write(&dir, "q.json", r#"{"command":"coapprox","space":"linf2.json","basis":[[1,1]],"x":[1,0]}"#);
    let out = json(&["query", s(&q), "--json"]);
    assert_eq!(out["in_domain"], true);
    assert_eq!(out["solution"]["coefficient_ranges"][0]["min"], "0");
    assert_eq!(out["solution"]["coefficient_ranges"][0]["max"], "1");
    let unknown = write(&dir, "u.json", r#"{"command":"frobnicate","space":{"kind":"l1","n":2}}"#);
    assert_eq!(coorth(&["query", s(&unknown)], &[]).status.code(), Some(2));
}

#[test]
fn paper_example_text_mode() {
    let out = coorth(&["paper-example"], &[]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dim: 5\n"));
    assert!(text.contains("strong: true\n"));
}
