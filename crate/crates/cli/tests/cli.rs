//! End-to-end CLI checks through the compiled binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn gmat(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmat"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn write_temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("gmat-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn g_of_pappus_corpus_file() {
    let root = workspace_root();
    let out = gmat(&["g", "corpus/matroids/pappus.json"], &root);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["g"]["t"], serde_json::json!([["1", 12], ["2", 21], ["3", 10]]));
}

#[test]
fn g_on_plain_matroid_json() {
    let path = write_temp(
        "u24.json",
        r#"{"n":4,"rank":2,"bases":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
    );
    let out = gmat(&["g", path.to_str().unwrap()], &workspace_root());
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["g"]["t"], serde_json::json!([["1", 2], ["2", 1]]));
    assert!(v["sanity"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn tplv_check_zero_lift_and_witness() {
    let root = workspace_root();
    let out = gmat(&["tplv", "check", "corpus/lifts/zero24.json"], &root);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tropical_pluecker"], true);

    let bad = write_temp(
        "bad-lift.json",
        r#"{"n":4,"d":2,"values":[
            {"I":[1,2],"p":"0"},{"I":[1,3],"p":"1"},{"I":[1,4],"p":"2"},
            {"I":[2,3],"p":"0"},{"I":[2,4],"p":"0"},{"I":[3,4],"p":"0"}]}"#,
    );
    let out = gmat(&["tplv", "check", bad.to_str().unwrap()], &root);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tropical_pluecker"], false);
    assert!(v["witness"]["quad"].is_array());
}

#[test]
fn subdivide_split_with_bounds() {
    let root = workspace_root();
    let out = gmat(
        &["subdivide", "corpus/lifts/split24.json", "--fvector", "--verify-bound", "--solve-g"],
        &root,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["facets"].as_array().unwrap().len(), 2);
    assert_eq!(v["interior_f_vector"], serde_json::json!([[1, 2], [2, 1]]));
    assert_eq!(v["bound_report"]["all_within"], true);
    assert_eq!(v["bound_report"]["equality"], true);
    assert_eq!(v["bound_report"]["all_facets_series_parallel"], true);
    // the solved map contains the ambient U(2,4) with g = 2t + t^2
    let solved = v["solved_g"].as_array().unwrap();
    assert!(solved.iter().any(|e| e["g"]["t"] == serde_json::json!([["1", 2], ["2", 1]])));
}

#[test]
fn malformed_json_exits_two() {
    let path = write_temp("broken.json", "{ not json");
    let out = gmat(&["check", path.to_str().unwrap()], &workspace_root());
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line") || err.contains("column"), "{err}");
}

#[test]
fn invalid_matroid_exits_one_with_witness() {
    let path = write_temp(
        "invalid.json",
        r#"{"n":4,"rank":2,"bases":[[1,2],[3,4]]}"#,
    );
    let out = gmat(&["check", path.to_str().unwrap()], &workspace_root());
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert!(v["witness"].as_str().unwrap().contains("exchange"));
}

#[test]
fn minors_report_relabeling() {
    let path = write_temp(
        "u24b.json",
        r#"{"n":4,"rank":2,"bases":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
    );
    let out = gmat(&["contract", path.to_str().unwrap(), "4"], &workspace_root());
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["matroid"]["rank"], 1);
    assert_eq!(v["relabeling"], serde_json::json!([1, 2, 3]));
}

#[test]
fn kclass_with_gkm() {
    let path = write_temp(
        "u24c.json",
        r#"{"n":4,"rank":2,"bases":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
    );
    let out = gmat(&["kclass", path.to_str().unwrap(), "--verify-gkm"], &workspace_root());
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["gkm"], true);
    assert_eq!(v["n"], 4);
    // f_{12} = 1 - x3 x4 / (x1 x2)
    let f12 = v["fI"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["I"] == serde_json::json!([1, 2]))
        .unwrap();
    assert_eq!(f12["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn valuative_on_split() {
    let root = workspace_root();
    let out = gmat(&["valuative", "corpus/lifts/split24.json"], &root);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["holds"], true);
}

#[test]
fn graph_and_matrix_inputs() {
    let graph = write_temp(
        "k4.json",
        r#"{"vertices":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
    );
    let out = gmat(&["beta", graph.to_str().unwrap()], &workspace_root());
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["beta"], 2);

    let matrix = write_temp(
        "mat.json",
        r#"{"field":"Q","rows":[["1","0","1","1"],["0","1","1","2"]]}"#,
    );
    let out = gmat(&["g", matrix.to_str().unwrap()], &workspace_root());
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pretty"], "2t + t^2");
}

#[test]
fn text_format_renders() {
    let path = write_temp(
        "u24d.json",
        r#"{"n":4,"rank":2,"bases":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
    );
    let out = gmat(&["--format", "text", "g", path.to_str().unwrap()], &workspace_root());
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("2t + t^2"), "{text}");
}

#[test]
fn corpus_verify_passes_and_is_seed_deterministic() {
    let root = workspace_root();
    let out1 = gmat(&["corpus", "verify", "--seed", "11"], &root);
    assert!(out1.status.success(), "{}", String::from_utf8_lossy(&out1.stdout));
    let out2 = gmat(&["corpus", "verify", "--seed", "11"], &root);
    assert_eq!(out1.stdout, out2.stdout);
    let v: serde_json::Value = serde_json::from_slice(&out1.stdout).unwrap();
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 9);
}
