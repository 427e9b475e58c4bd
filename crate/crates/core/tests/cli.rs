use std::process::Command;

use serde_json::Value;

fn psdef(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_psdef")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, String::from_utf8(out.stderr).unwrap())
}

#[test]
fn ps_dim_and_hilbert() {
    let (code, v, _) = psdef(&["ps-dim", "--group", "abelian:2x2"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 10);
    assert_eq!(v["stabilized"], true);
    let (code, v, _) = psdef(&["hilbert", "--group", "dihedral:4", "--kmax", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["stabilized"], false);
    assert_eq!(v["dims"].as_array().unwrap().len(), 2);
}

#[test]
fn witness_and_verdict() {
    let (code, v, _) = psdef(&["witness", "--group", "extraspecial32", "--element", "a^2", "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["member"], "no");
    let (code, v, _) = psdef(&["witness", "--group", "extraspecial32", "--element", "1", "--k", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["member"], "yes");
    let (code, v, _) = psdef(&["verdict", "--group", "dihedral:4", "--family", "dihedral"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "FreeIsomorphic");
    assert_eq!(v["upper_bound_d_ps"], 11);
    let (code, _, err) = psdef(&["verdict", "--group", "abelian:4", "--family", "dihedral"]);
    assert_eq!(code, 1);
    assert!(err.contains("not in family"));
}

#[test]
fn group_spec_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2.json");
    std::fs::write(&path, r#"{"name": "z2", "kind": "table", "table": [[0,1],[1,0]], "builtin": null}"#).unwrap();
    let (code, v, _) = psdef(&["ps-dim", "--group", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 3);
    let (code, _, err) = psdef(&["ps-dim", "--group", "no-such-group"]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown group"));
}

#[test]
fn lift_check() {
    let (code, v, _) = psdef(&["lift-check", "--group", "extraspecial32", "--element", "c^2", "--certificate"]);
    assert_eq!(code, 0);
    assert_eq!(v["member"], "yes");
    assert_eq!(v["certificate"]["verified"], true);
    let (code, v, _) = psdef(&["lift-check", "--group", "dihedral:4", "--element", "r"]);
    assert_eq!(code, 0);
    assert_eq!(v["member"], "no");
    let (code, v, _) = psdef(&["lift-check", "--group", "extraspecial32", "--element", "a^2", "--max-basis", "5"]);
    assert_eq!(code, 2);
    assert_eq!(v["member"], "unknown");
}

#[test]
fn verify_paper_flags() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let skip = "hilbert,witness,quotient,lift,sandwich";
    let (code, _, err) = psdef(&["verify-paper", "--skip", skip, "--out", out.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("SKIPPED"));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["overall"], true);
    assert_eq!(report["failed"], 0);

    let table = include_str!("../data/expected.json").replace("\"value\": 17", "\"value\": 18");
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, table).unwrap();
    let (code, v, err) = psdef(&["verify-paper", "--skip", skip, "--expected", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["overall"], false);
    assert!(err.contains("FAIL") && err.contains("structure.classes"));
    let c = v["checks"].as_array().unwrap().iter().find(|c| c["id"] == "structure.classes").unwrap();
    assert_eq!((c["expected"].clone(), c["computed"].clone()), (Value::from(18), Value::from(17)));

    let (code, _, _) = psdef(&["verify-paper", "--skip", "bogus"]);
    assert_eq!(code, 2);
}
