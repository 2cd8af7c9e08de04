use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn hemilat(args: &[&str], stdin: &str) -> Output {
    hemilat_env(args, stdin, &[])
}

fn hemilat_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hemilat"))
        .args(args)
        .env_remove("HEMILAT_MAX_SIZE")
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn fixture(name: &str) -> String {
    let out = hemilat(&["fixtures", "--name", name], "");
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn paper5_classifies() {
    let out = hemilat(&["classify"], &fixture("paper5"));
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["symmetric"], true);
    assert_eq!(v["condition_s"], false);
    assert_eq!(v["witnesses"]["condition_s"], serde_json::json!([1, 2]));
}

#[test]
fn trivial_has_one_congruence() {
    let v = json(&hemilat(&["congruences"], &fixture("trivial")));
    assert_eq!(v["count"], 1);
}

#[test]
fn principal_by_label() {
    let out = hemilat(&["principal", "--pair", "x,1"], &fixture("B4-order-zero"));
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["blocks"], serde_json::json!([[0, 1, 2, 3]]));
    // Labels win over indices: "1" is the top here.
    let top = hemilat(&["principal", "--pair", "1,3"], &fixture("B4-order-zero"));
    assert_eq!(json(&top)["pair"], serde_json::json!([3, 3]));
    let mut unlabeled: Value = serde_json::from_str(&fixture("B4-order-zero")).unwrap();
    unlabeled.as_object_mut().unwrap().remove("labels");
    let by_index = hemilat(&["principal", "--pair", "1,3"], &unlabeled.to_string());
    assert_eq!(json(&by_index)["blocks"], json(&out)["blocks"]);
    let bad = hemilat(&["principal", "--pair", "x"], &fixture("B4-order-zero"));
    assert_eq!(code(&bad), 2);
}

#[test]
fn law_violation_exits_one_with_witness() {
    let doc = r#"{"size":2,"meet":[[0,0],[0,1]],"top":1,"imp":[[1,1],[1,1]]}"#;
    let out = hemilat(&["validate"], doc);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert_eq!(v["witness"], serde_json::json!([1, 0]));

    let not_assoc = r#"{"size":3,"meet":[[0,2,0],[2,1,1],[0,1,2]],"top":2}"#;
    assert_eq!(code(&hemilat(&["validate"], not_assoc)), 1);
}

#[test]
fn malformed_input_exits_two() {
    let out = hemilat(&["validate"], r#"{"size":2,"meat":[]}"#);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("meat"));

    let out = hemilat(&["validate"], r#"{"size":3,"meet":[[0,0],[0,1]],"top":1}"#);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("meet"));

    assert_eq!(code(&hemilat(&["build", "--kind", "bogus"], &fixture("B4"))), 2);
    assert_eq!(code(&hemilat(&["frobnicate"], "")), 2);
    // A bare semilattice has nothing to classify.
    let s = r#"{"size":2,"meet":[[0,0],[0,1]],"top":1}"#;
    assert_eq!(code(&hemilat(&["classify"], s)), 2);
}

#[test]
fn build_then_classify_pipeline() {
    let s = r#"{"size":4,"meet":[[0,0,0,0],[0,1,0,1],[0,0,2,2],[0,1,2,3]],"top":3,"labels":["0","x","y","1"]}"#;
    let built = hemilat(&["build", "--kind", "order-consequent"], s);
    assert_eq!(code(&built), 0);
    let v = json(&hemilat(&["classify"], &String::from_utf8(built.stdout).unwrap()));
    assert_eq!(v["h5"], true);
    assert_eq!(v["h4"], false);
    assert_eq!(v["witnesses"]["h4"], serde_json::json!([1, 2]));
}

#[test]
fn file_input_and_output() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("a.json");
    let output = dir.path().join("s.json");
    std::fs::write(&input, fixture("B4-order-consequent")).unwrap();
    let out = hemilat(&["symmetrize", "--in", input.to_str().unwrap(), "--out", output.to_str().unwrap()], "");
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&output).unwrap();
    let v = json(&hemilat(&["classify"], &text));
    assert_eq!(v["symmetric"], true);
    let missing = hemilat(&["classify", "--in", dir.path().join("nope.json").to_str().unwrap()], "");
    assert_eq!(code(&missing), 2);
}

#[test]
fn emitted_algebras_revalidate() {
    let names: Vec<String> = serde_json::from_value(json(&hemilat(&["fixtures"], ""))).unwrap();
    assert!(names.contains(&"paper5".to_string()));
    for name in names {
        let doc = fixture(&name);
        let first = json(&hemilat(&["classify"], &doc));
        let round = json(&hemilat(&["symmetrize"], &doc));
        assert_eq!(code(&hemilat(&["validate"], &round.to_string())), 0, "{name}");
        assert_eq!(json(&hemilat(&["classify"], &doc)), first, "{name}");
    }
}

#[test]
fn roundtrip_verdicts() {
    let v = json(&hemilat(&["roundtrip"], &fixture("B4-order-consequent")));
    assert_eq!(v["roundtrip_h4"], false);
    assert_eq!(v["h4"]["witness"], serde_json::json!([1, 2]));
    assert!(v["roundtrip_s"].is_null());
    let v = json(&hemilat(&["roundtrip"], &fixture("paper5")));
    assert_eq!(v["roundtrip_s"], false);
    let v = json(&hemilat(&["roundtrip"], &fixture("B4")));
    assert_eq!(v["roundtrip_h4"], true);
}

#[test]
fn filters_report_t_witnesses() {
    let v = json(&hemilat(&["filters"], &fixture("B4-eq-consequent")));
    assert_eq!(v["count"], 4);
    let xf = v["filters"].as_array().unwrap().iter().find(|f| f["filter"] == serde_json::json!([1, 3])).unwrap();
    assert_eq!(xf["congruent"], false);
    assert_eq!(xf["t_value"], 0);
}

#[test]
fn dot_output() {
    let out = hemilat(&["congruences", "--dot", "-"], &fixture("chain3-order-meet"));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("digraph congruences"));
    assert_eq!(text.matches(" -> ").count(), 2);
    let out = hemilat(&["classify", "--dot", "-"], &fixture("B4"));
    assert!(String::from_utf8(out.stdout).unwrap().contains("digraph order"));
}

#[test]
fn search_commands() {
    let v = json(&hemilat(&["search", "--property", "product-escape", "--kind", "eq-meet"], ""));
    assert_eq!(v["found"], true);
    assert_eq!(v["factors"].as_array().unwrap().len(), 2);
    let v = json(&hemilat(&["search", "--property", "h5", "--max-size", "2", "--jobs", "2"], ""));
    assert_eq!(v["found"], true);
    assert_eq!(v["algebra"]["size"], 2);
    let v = json(&hemilat(&["search", "--property", "h4", "--max-size", "3", "--kind", "order-meet"], ""));
    assert_eq!(v["found"], false);
    assert_eq!(code(&hemilat(&["search", "--property", "product-escape"], "")), 2);
    assert_eq!(code(&hemilat(&["search", "--property", "nonsense"], "")), 2);
}

#[test]
fn enumerate_respects_the_cap() {
    let out = hemilat_env(&["enumerate", "--max-size", "5"], "", &[("HEMILAT_MAX_SIZE", "4")]);
    assert_eq!(code(&out), 2);
    let out = hemilat(&["enumerate", "--max-size", "5"], "");
    let lines = String::from_utf8(out.stdout).unwrap();
    assert_eq!(lines.lines().count(), 1 + 1 + 1 + 2 + 5);

    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("algs");
    let out = hemilat(&["enumerate", "--max-size", "3", "--kind", "eq-meet", "--out", target.to_str().unwrap()], "");
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read_dir(&target).unwrap().count(), 3);
    assert_eq!(json(&out)["written"], 3);
    let out = hemilat(&["enumerate", "--max-size", "6", "--algebras"], "");
    assert_eq!(code(&out), 2);
}
