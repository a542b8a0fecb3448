use std::process::{Command, Output};

use serde_json::Value;

fn qal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qal")).args(args).output().expect("run qal")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = qal(&all);
    let v = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (o.status.code().unwrap(), v)
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/report.schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

#[test]
fn verify_pvh_json() {
    let (code, v) = json(&["verify", "pvh", "--family", "pvb", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["check"], "pvh");
    assert_eq!(v["family"], "pvb");
    assert_eq!(v["n"], 4);
    assert_eq!(v["degree2"]["relators"], 36);
    assert_eq!(v["degree2"]["rank"], 36);
    assert_eq!(v["degree2"]["pass"], true);
    assert_eq!(v["degree3"]["kernel_dim"], 24);
    assert_eq!(v["degree3"]["image_rank"], 24);
    assert_eq!(v["degree3"]["pass"], true);
    assert_eq!(v["verdict"], "PASS");
}

#[test]
fn lah_table_row() {
    let o = qal(&["lah", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["2", "36"]), "{out}");
    let (_, v) = json(&["lah", "--n", "4"]);
    assert_eq!(v["rows"][2], serde_json::json!([2, 36]));
}

#[test]
fn empty_basis() {
    let (code, v) = json(&["basis", "chain-gangs", "--n", "3", "--degree", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"], serde_json::json!([]));
    assert_eq!(v["count"], 0);
}

#[test]
fn basis_csv_has_header() {
    let o = qal(&["basis", "updown", "--n", "3", "--degree", "1", "--format", "csv"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("index,edges,monomial"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn reduce_triangle() {
    // a directed 3-cycle is a loop and reduces to chain gangs
    let (code, v) = json(&["reduce", "prune", "1>2,2>3,3>1"]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 3);
    let (_, w) = json(&["reduce", "prune", "1>2,2>1"]);
    assert_eq!(w["rows"], serde_json::json!([]));
    // r13∧r23 = r12∧r23 − r21∧r13 = r12∧r23 + r13∧r21
    let (_, x) = json(&["reduce", "lex", "1>3,2>3"]);
    assert_eq!(x["rows"], serde_json::json!([["1", "1>2,2>3", "r1_2∧r2_3"], ["1", "1>3,2>1", "r1_3∧r2_1"]]));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qal(&[]).status.code(), Some(2));
    assert_eq!(qal(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(qal(&["reduce", "prune", "1>1"]).status.code(), Some(2));
    assert_eq!(qal(&["reduce", "prune", "1>5", "--n", "4"]).status.code(), Some(2));
    assert_eq!(qal(&["verify", "pvh", "--family", "xyz"]).status.code(), Some(2));
}

#[test]
fn budget_is_enforced() {
    let o = qal(&["verify", "pvh", "--n", "5", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
    let o = qal(&["basis", "chain-gangs", "--n", "9", "--degree", "5", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn failing_check_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let rel = r#"{"terms":[{"word":["r1_2","r2_1"],"coeff":"1"},{"word":["r2_1","r1_2"],"coeff":"-1"}]}"#;
    std::fs::write(&path, format!(r#"{{"n":2,"generators":["r1_2","r2_1"],"relations":[{rel},{rel}]}}"#)).unwrap();
    let (code, v) = json(&["verify", "degree2", "--presentation", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "FAIL");
    assert_eq!(v["degree2"]["rank"], 1);
}

#[test]
fn euler_on_a_presentation_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    std::fs::write(&path, r#"{"n":3,"family":"pvb"}"#).unwrap();
    let (code, v) = json(&["verify", "euler", "--presentation", path.to_str().unwrap(), "--max-degree", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "PASS");
    let (code, h) = json(&["hilbert", "--presentation", path.to_str().unwrap(), "--max-degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(h["rows"][2], serde_json::json!([2, 30, 6]));
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.dot");
    let o = qal(&["basis", "down", "--n", "3", "--degree", "2", "--emit-dot", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("f0_2 -> f0_1;"));
    assert!(dot.contains("f0_3 -> f0_1;"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "confluence", "--n", "5", "--trials", "20", "--seed", "7", "--format", "json"];
    assert_eq!(qal(&args).stdout, qal(&args).stdout);
    let args = ["verify", "defect", "--n", "6", "--trials", "50", "--seed", "3", "--format", "csv"];
    assert_eq!(qal(&args).stdout, qal(&args).stdout);
}

#[test]
fn every_json_output_matches_the_schema() {
    let validator = schema();
    let commands: &[&[&str]] = &[
        &["lah", "--n", "5"],
        &["stirling", "--n", "5"],
        &["basis", "chain-gangs", "--n", "4", "--degree", "2"],
        &["basis", "up", "--n", "4", "--degree", "2"],
        &["reduce", "prune", "1>2,2>3,3>1"],
        &["reduce", "lex", "1>2,3>2"],
        &["hilbert", "--n", "3", "--max-degree", "3"],
        &["verify", "pvh", "--n", "3"],
        &["verify", "pvh", "--n", "4", "--family", "pb"],
        &["verify", "pvh", "--n", "4", "--family", "pfb"],
        &["verify", "coproduct"],
        &["verify", "confluence", "--trials", "10"],
        &["verify", "euler", "--n", "3", "--max-degree", "3"],
        &["verify", "psi"],
        &["verify", "degree2"],
        &["verify", "lahstirling", "--n", "6"],
        &["verify", "defect", "--trials", "20"],
        &["verify", "chain-gangs", "--n", "3"],
        &["verify", "updown", "--n", "4"],
    ];
    for args in commands {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{args:?}");
        if let Err(e) = validator.validate(&v) {
            panic!("{args:?}: {e}\n{v}");
        }
    }
    assert!(!validator.is_valid(&serde_json::json!({"check": "x"})));
    assert!(!validator.is_valid(&serde_json::json!({"check": "x", "verdict": "MAYBE"})));
}

#[test]
fn partial_verdict_for_pb() {
    let (code, v) = json(&["verify", "pvh", "--family", "pb", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "PARTIAL");
}
