use std::path::PathBuf;
use std::process::{Command, Output};

fn nourish(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nourish"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(name)
}

#[test]
fn gen_helm_json() {
    let out = nourish(&["gen", "--family", "helm", "--n", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 7);
    assert_eq!(v["edges"].as_array().unwrap().len(), 9);
}

#[test]
fn gen_rejects_small_cycle() {
    let out = nourish(&["gen", "--family", "cycle", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("minimum 3"), "{err}");
}

#[test]
fn gen_path_dot() {
    let out = nourish(&["gen", "--family", "path", "--m", "1", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text, "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    assert!(!text.contains("->"));
}

#[test]
fn gen_split_from_adjacency() {
    let out = nourish(&["gen", "--family", "split", "--c", "2", "--adj", "0,1;1", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "u,v\n0,1\n0,2\n1,2\n1,3\n");
    let out = nourish(&["gen", "--family", "split", "--c", "2", "--adj", "0;"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_family_is_usage_error() {
    assert_eq!(nourish(&["gen", "--family", "crown", "--n", "4"]).status.code(), Some(2));
    assert_eq!(nourish(&["gen", "--family", "fan", "--m", "2"]).status.code(), Some(2));
    assert_eq!(nourish(&["bogus"]).status.code(), Some(2));
}

#[test]
fn power_and_omega() {
    let out = nourish(&["power", "--family", "cycle", "--n", "4", "--r", "2", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"n\":4,\"edges\":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}\n");
    let out = nourish(&["omega", "--family", "cycle", "--n", "6", "--r", "2"]);
    assert_eq!(stdout(&out), "omega: 3\nwitness: 0 1 2\n");
    let out = nourish(&["omega", "--family", "cycle", "--n", "6", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kappa_modes() {
    let out = nourish(&["kappa", "--family", "sunlet", "--n", "5", "--r", "2", "--mode", "formula"]);
    assert_eq!(stdout(&out), "4\n");
    let out = nourish(&["kappa", "--family", "wheel", "--n", "3", "--r", "1", "--mode", "both"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("formula: 3\noracle: 4\nstatus: disagree\n"), "{text}");
    let out = nourish(&["kappa", "--family", "complete", "--n", "6", "--r", "3", "--mode", "oracle"]);
    assert_eq!(stdout(&out), "6\n");
    let out = nourish(&["kappa", "--family", "wheel", "--n", "3", "--r", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "disagree");
    assert_eq!(nourish(&["kappa", "--family", "cycle", "--n", "5", "--r", "0"]).status.code(), Some(2));
}

#[test]
fn label_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    let labels = dir.path().join("l.json");
    let out = nourish(&[
        "label", "--family", "friendship", "--n", "3", "--r", "2", "--set-size", "3",
        "--graph-out", graph.to_str().unwrap(), "--out", labels.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let l: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&labels).unwrap()).unwrap();
    assert_eq!(l["s"], 3);
    assert_eq!(l["labels"].as_array().unwrap().len(), 7);
    let out = nourish(&["verify", "--graph", graph.to_str().unwrap(), "--labeling", labels.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"is_iasi\":true,\"is_strong\":true,\"failures\":[]}\n");
}

#[test]
fn verify_reports_vertex_collision() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    let labels = dir.path().join("l.json");
    std::fs::write(&graph, r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
    std::fs::write(&labels, r#"{"s":2,"labels":[[0,1],[0,2],[0,1]]}"#).unwrap();
    let out = nourish(&["verify", "--graph", graph.to_str().unwrap(), "--labeling", labels.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["is_iasi"], false);
    assert_eq!(v["failures"][0]["kind"], "vertex-collision");
    assert_eq!(v["failures"][0]["vertices"], serde_json::json!([0, 2]));

    std::fs::write(&labels, r#"{"s":2,"labels":[[0,1]]}"#).unwrap();
    let out = nourish(&["verify", "--graph", graph.to_str().unwrap(), "--labeling", labels.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::write(&labels, "not json").unwrap();
    let out = nourish(&["verify", "--graph", graph.to_str().unwrap(), "--labeling", labels.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reconcile_cycle_grid() {
    let out = nourish(&["reconcile", "--family", "cycle", "--n", "3..8", "--r", "1..4", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 24);
    assert!(rows.iter().all(|r| r.contains(",agree,")), "{text}");
}

#[test]
fn reconcile_rejects_bad_ranges() {
    assert_eq!(nourish(&["reconcile", "--family", "cycle", "--n", "5..3"]).status.code(), Some(2));
    assert_eq!(nourish(&["reconcile", "--family", "cycle", "--n", "2..4"]).status.code(), Some(2));
    assert_eq!(nourish(&["reconcile", "--family", "cycle", "--m", "3"]).status.code(), Some(2));
    assert_eq!(nourish(&["reconcile", "--n", "3..4"]).status.code(), Some(2));
}

#[test]
fn reconcile_default_grid_matches_golden_and_is_deterministic() {
    let path = golden("default_grid.csv");
    let first = nourish(&["reconcile", "--expect-golden", path.to_str().unwrap()]);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stderr));
    let second = Command::new(env!("CARGO_BIN_EXE_nourish"))
        .arg("reconcile")
        .env("NOURISH_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(first.stdout, second.stdout);
    let j1 = nourish(&["reconcile", "--format", "json"]);
    let j2 = nourish(&["reconcile", "--format", "json"]);
    assert_eq!(j1.stdout, j2.stdout);
}

#[test]
fn reconcile_flags_golden_deviation() {
    let dir = tempfile::tempdir().unwrap();
    let fake = dir.path().join("golden.csv");
    std::fs::write(&fake, "family,params,r,formula,oracle,status,witness\nwheel,n=3,1,3,3,agree,0 1 2\n").unwrap();
    let out = nourish(&[
        "reconcile", "--family", "wheel", "--n", "3", "--r", "1", "--expect-golden", fake.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    // disagreements alone are findings, not failures
    let out = nourish(&["reconcile", "--family", "wheel", "--n", "3", "--r", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("wheel,n=3,1,3,4,disagree,0 1 2 3"));
}

#[test]
fn reconcile_json_round_trips() {
    let out = nourish(&["reconcile", "--family", "split", "--c", "2", "--s", "1", "--r", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let recs = v.as_array().unwrap();
    assert_eq!(recs.len(), 3);
    assert_eq!(recs[0]["spec"], serde_json::json!({"family": "split", "params": {"c": 2, "adj": [[0]]}}));
    let spec: iasi_core::FamilySpec = serde_json::from_value(recs[2]["spec"].clone()).unwrap();
    assert_eq!(spec, iasi_core::FamilySpec::Split { c: 2, adj: vec![vec![0, 1]] });
}
