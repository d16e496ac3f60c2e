use std::path::PathBuf;
use std::process::Command;

use orbifold::cli::{run, InputSpec};

fn ova(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ova")).args(args).output().expect("ova runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn temp_input(tag: &str, json: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("ova-test-{}-{}.json", tag, std::process::id()));
    std::fs::write(&path, json).unwrap();
    path
}

#[test]
fn odd_lattice_exits_2() {
    let path = temp_input("odd", r#"{"name":"odd","gram":[[1]],"sigma":[[-1]]}"#);
    let (code, _, err) = ova(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("invalid lattice"));
}

#[test]
fn indefinite_gram_exits_2() {
    let path = temp_input("indef", r#"{"gram":[[2,3],[3,2]],"sigma":[[0,1],[1,0]]}"#);
    assert_eq!(ova(&["classify", "--input", path.to_str().unwrap()]).0, 2);
}

#[test]
fn identity_isometry_exits_3() {
    let path = temp_input("id", r#"{"gram":[[2]],"sigma":[[1]]}"#);
    assert_eq!(ova(&["classify", "--input", path.to_str().unwrap()]).0, 3);
}

#[test]
fn non_isometry_exits_3() {
    let path = temp_input("noniso", r#"{"gram":[[2,-1],[-1,2]],"sigma":[[1,1],[0,-1]]}"#);
    assert_eq!(ova(&["analyze", "--input", path.to_str().unwrap()]).0, 3);
}

#[test]
fn golden_mismatch_exits_4() {
    let (code, _, err) = ova(&["verify", "--catalog", "E6-dynkin"]);
    assert_eq!(code, 4);
    assert!(err.contains("FAIL golden: N_tw"));
}

#[test]
fn verify_passes_on_a2() {
    let (code, out, _) = ova(&["verify", "--catalog", "A2-dynkin"]);
    assert_eq!(code, 0);
    assert!(!out.contains("FAIL"));
}

#[test]
fn theta_dump() {
    let (code, out, _) = ova(&["theta", "--catalog", "A2-dynkin", "--order", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("0:1, 1:6, 3:6"), "{}", out);
}

#[test]
fn theta_coset_json_uses_rational_strings() {
    let (code, out, _) = ova(&["theta", "--catalog", "A2-dynkin", "--order", "2", "--coset", "1/3,2/3", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], "2/1");
    assert_eq!(v["terms"][0], serde_json::json!(["1/3", "3"]));
}

#[test]
fn classify_json_reports_counts() {
    let (code, out, _) = ova(&["classify", "--catalog", "A2-dynkin", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["counts"]["total"], 20);
    assert_eq!(v["counts"]["q_bar_index"], 2);
}

#[test]
fn input_file_roundtrips_through_json() {
    let spec = InputSpec::from_catalog("A3-dynkin").unwrap();
    let text = serde_json::to_string(&spec).unwrap();
    let path = temp_input("a3", &text);
    let from_file = run(["ova", "classify", "--input", path.to_str().unwrap(), "--json"]);
    let from_catalog = run(["ova", "classify", "--catalog", "A3-dynkin", "--json"]);
    assert_eq!(from_file.code, 0);
    let a: serde_json::Value = serde_json::from_str(&from_file.output).unwrap();
    let b: serde_json::Value = serde_json::from_str(&from_catalog.output).unwrap();
    assert_eq!(a["modules"], b["modules"]);
    assert_eq!(a["counts"], b["counts"]);
}

#[test]
fn unknown_catalog_name_is_an_input_error() {
    let (code, _, _) = ova(&["classify", "--catalog", "B2-dynkin"]);
    assert_ne!(code, 0);
}

#[test]
fn catalog_lists_entries() {
    let (code, out, _) = ova(&["catalog"]);
    assert_eq!(code, 0);
    assert!(out.contains("E8-minus-one"));
}
