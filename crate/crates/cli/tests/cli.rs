use std::process::{Command, Output};

use serde_json::Value;

fn froblab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_froblab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn lat_check_on_an_m3_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m3.json");
    std::fs::write(&path, r#"{"name":"m3","size":5,"covers":[[0,1],[0,2],[0,3],[1,4],[2,4],[3,4]]}"#).unwrap();
    let dot = dir.path().join("m3.dot");
    let out = froblab(&["lat-check", path.to_str().unwrap(), "--json", "--dot", dot.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["distributive"], false);
    assert_eq!(v["nuclear"], false);
    assert_eq!(v["tight_frobenius_ok"], true);
    assert_eq!(v["violations"], Value::Array(vec![]));
    assert!(std::fs::read_to_string(dot).unwrap().starts_with("digraph"));
}

#[test]
fn sweep_to_size_five() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rows.csv");
    let out = froblab(&["sweep", "--max-size", "5", "--json", "--csv", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    assert_eq!(rows.as_array().unwrap().len(), 10);
    let csv = std::fs::read_to_string(csv).unwrap();
    assert_eq!(csv.lines().count(), 11);
    assert!(csv.starts_with("code,size,distributive,"));
}

#[test]
fn malformed_json_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"size\": 3, \"covers\": [[0,1],").unwrap();
    let out = froblab(&["lat-check", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "schema");

    std::fs::write(&path, r#"{"size":2,"covers":[[0,1],[1,0]]}"#).unwrap();
    let out = froblab(&["lat-check", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["path"], "covers");

    let out = froblab(&["lat-check", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = froblab(&["lat-gen", "--family", "pentagon"]);
    assert_eq!(out.status.code(), Some(2));
    let out = froblab(&["sweep", "--max-size", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_limits_exit_three() {
    let out = froblab(&["quantale-endo", "--family", "boolean:3", "--cap-hom", "50"]);
    assert_eq!(out.status.code(), Some(3));
    let out = froblab(&["rel-search", "--family", "empty:9"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let a = froblab(&["quantale-tight", "--family", "n5", "--json"]);
    let b = froblab(&["quantale-tight", "--family", "n5", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let a = froblab(&["rel-search", "--family", "random:3", "--seed", "11", "--json"]);
    let b = froblab(&["rel-search", "--family", "random:3", "--seed", "11", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn generated_lattices_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b2.json");
    let out = froblab(&["lat-gen", "--family", "boolean:2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = froblab(&["quantale-endo", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["size"], 16);
    assert!(!v["witnesses"].as_array().unwrap().is_empty());

    let q = dir.path().join("q.json");
    std::fs::write(&q, serde_json::to_string(&v["quantale"]).unwrap()).unwrap();
    let out = froblab(&["frobenius-search", q.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["witnesses"], v["witnesses"]);
}

#[test]
fn relation_search_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    std::fs::write(&path, r#"{"size":2,"triples":[[0,0,1],[1,0,0]]}"#).unwrap();
    let out = froblab(&["rel-search", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = froblab(&["rel-search", "--family", "cyclic:4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["witnesses"].as_array().unwrap().contains(&serde_json::json!({"l": [0, 3, 2, 1]})));
}
