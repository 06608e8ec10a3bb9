use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcshuffle")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tcshuffle"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(1), "{args:?} should fail with exit 1");
    assert!(out.stdout.is_empty());
    let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    assert!(err["error"]["message"].is_string());
    err
}

const HOPF_RING: &str = r#"{"modulus":0,
  "generators":[{"name":"u","degree":2,"truncation":3},{"name":"v","degree":4,"truncation":2}],
  "relations":[{"lhs":{"u":2},"coefficient":1,"rhs":{"v":1}},{"lhs":{"u":1,"v":1}}]}"#;

#[test]
fn degree_split_for_two_spheres() {
    let out = run(&["degree", "1", "1", "4"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v, json!({"degree": 6, "s_plus": 4, "s_minus": 2}));
    // keys in declaration order
    let compact: String = String::from_utf8(out.stdout).unwrap().split_whitespace().collect();
    assert_eq!(compact, r#"{"degree":6,"s_plus":4,"s_minus":2}"#);
    assert_eq!(ok_json(&["degree", "1", "1", "3"])["degree"], 2);
}

#[test]
fn tc_degree_two_circle() {
    let v = ok_json(&["tc", r#"{"p":1,"q":1,"attaching":{"Degree":2}}"#]);
    assert_eq!(v["exact"], 3);
    assert_eq!(v["justifications"][0]["rule"], "grados");
    assert!(v["justifications"][0]["trace"].as_array().is_some_and(|t| !t.is_empty()));
}

#[test]
fn tc_reads_stdin_and_files() {
    let input = r#"{"p":2,"q":3,"attaching":{"ClassicalHopf":1}}"#;
    let out = run_stdin(&["tc", "-"], input);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["exact"], 4);

    let path = std::env::temp_dir().join(format!("tcshuffle-cli-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"p":5,"q":10,"attaching":{"MetastableH0":{"h0_nonzero":true}}}"#).unwrap();
    let v = ok_json(&["tc", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(v["exact"], 3);
}

#[test]
fn tc_product_with_sphere() {
    let verdict = r#"{"lower":4,"upper":4,"justifications":[{"rule":"cup-length","citation":"zero-divisor cup length","lower":4,"upper":4,"trace":[]}]}"#;
    let v = ok_json(&["tc", verdict, "--times-sphere", "2", "--hopf-order", "2"]);
    assert_eq!(v["product"]["upper"], 5);
    assert_eq!(v["product"]["additivity_fails"], true);
    assert!(v.get("two_cell").is_none());

    let v = ok_json(&["tc", r#"{"p":1,"q":1,"attaching":{"Degree":2}}"#, "--times-sphere", "3"]);
    assert_eq!(v["two_cell"]["p"], 1);
    assert_eq!(v["verdict"]["exact"], 3);
}

#[test]
fn shuffles_trivial_and_small() {
    let v = ok_json(&["shuffles", "0", "0"]);
    assert_eq!(v["count"], 1);
    assert_eq!(v["shuffles"][0]["first_block"], json!([]));
    assert_eq!(v["shuffles"][0]["sign"], 1);

    let v = ok_json(&["shuffles", "2", "1"]);
    assert_eq!(v["count"], 3);
    let blocks: Vec<&Value> = v["shuffles"].as_array().unwrap().iter().map(|s| &s["first_block"]).collect();
    assert_eq!(blocks, [&json!([1, 2]), &json!([1, 3]), &json!([2, 3])]);
    let areas: Vec<i64> = v["shuffles"].as_array().unwrap().iter().map(|s| s["area"].as_i64().unwrap()).collect();
    assert_eq!(areas, [0, 1, 2]);
}

#[test]
fn ring_expression_and_cup_length() {
    let v = ok_json(&["ring", HOPF_RING, "--expr", "(1*u - u*1)^4", "--cup-length"]);
    assert_eq!(v["result"], "6·v_L·v_R");
    assert_eq!(v["nonzero"], true);
    assert_eq!(v["degree"], 8);
    assert_eq!(v["in"], "tensor_square");
    assert_eq!(v["terms"], json!([{"coefficient": "6", "monomial": {"v_L": 1, "v_R": 1}}]));
    assert_eq!(v["cup_length"]["tensor_square"], 4);

    let moore = r#"{"modulus":2,"generators":[{"name":"x","degree":1,"truncation":2},{"name":"y","degree":2,"truncation":2}],"relations":[{"lhs":{"x":1,"y":1}}]}"#;
    let v = ok_json(&["ring", moore, "--expr", "(1*y - y*1)^2"]);
    assert_eq!(v["result"], "0");
    assert_eq!(v["nonzero"], false);
}

#[test]
fn phi_matches_known_sum() {
    let v = ok_json(&["phi", "1", "0", "--degrees", "2"]);
    assert_eq!(v["text"], "1·(1⊗y3)⊗(x1⊗1)⊗(x2⊗1) - 1·(x1⊗1)⊗(1⊗y3)⊗(x2⊗1) + 1·(x1⊗1)⊗(x2⊗1)⊗(1⊗y3)");
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["degrees"], json!([2, 2, 2]));

    let v = ok_json(&["phi", "0", "0", "--degrees", "1,1", "--modulus", "2"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn prism_check_reports_success() {
    let v = ok_json(&["prism-check", "2", "1", "--samples", "5", "--seed", "7"]);
    assert_eq!(v["simplices"], 3);
    assert_eq!(v["relative_cycle"], true);
    assert_eq!(v["gluing_ok"], true);
    assert_eq!(v["seed"], 7);
}

#[test]
fn reproduce_passes() {
    let out = run(&["reproduce"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["passed"].as_u64().unwrap() > 100);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["ok"] == true));
}

#[test]
fn invalid_input_exits_one() {
    assert_eq!(error_json(&["frobnicate"])["error"]["kind"], "usage");
    assert_eq!(error_json(&["degree", "1"])["error"]["kind"], "usage");
    assert_eq!(error_json(&["degree", "1", "1", "0"])["error"]["kind"], "invalid_input");
    assert_eq!(error_json(&["tc", "{not json"])["error"]["kind"], "invalid_input");
    assert_eq!(error_json(&["tc", r#"{"p":1,"q":1,"attaching":{"Degree":2}"#])["error"]["kind"], "invalid_input");
    assert_eq!(error_json(&["tc", "/nonexistent/input.json"])["error"]["kind"], "invalid_input");
    error_json(&["phi", "1", "0", "--degrees", "1,2"]);
    error_json(&["phi", "0", "0", "--degrees", "1", "--modulus", "1"]);
    error_json(&["ring", HOPF_RING, "--expr", "u + w"]);
    error_json(&["ring", r#"{"generators":[{"name":"a","degree":0}]}"#]);
    error_json(&["shuffles", "15", "15"]);
    // contradictory facts: a nonzero H₀ of order 1
    error_json(&["tc", r#"{"p":5,"q":10,"attaching":{"MetastableH0":{"h0_nonzero":true,"h0_order":1}}}"#]);
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn text_format() {
    let out = run(&["--format", "text", "degree", "1", "1", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "degree 6  (#S⁺ = 4, #S⁻ = 2)");

    let out = run(&["tc", r#"{"p":1,"q":1,"attaching":{"Degree":2}}"#, "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("TC = 3\n"));
    assert!(text.contains("grados"));

    let out = run(&["--format", "text", "degree", "1", "1", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error (invalid_input)"));
}
