use std::path::Path;
use std::process::{Command, Output};

use cxcore::corpus::{parse_dsc, parse_sqc};
use cxcore::CellComplex;
use serde_json::Value;

fn cxtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cxtool")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = cxtool(&all);
    let v = serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}: {}", String::from_utf8_lossy(&o.stdout)));
    (code(&o), v)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn dot_counts(dot: &str) -> (usize, usize) {
    let nodes = dot.lines().filter(|l| l.contains("[label=") && !l.contains("--")).count();
    let edges = dot.lines().filter(|l| l.contains("--")).count();
    (nodes, edges)
}

#[test]
fn exit_codes() {
    assert_eq!(code(&cxtool(&["npc", "--corpus", "K"])), 0);
    assert_eq!(code(&cxtool(&["vh", "--corpus", "K"])), 1);
    assert_eq!(code(&cxtool(&["vh", "--corpus", "torus"])), 0);
    assert_eq!(code(&cxtool(&["npc", "--input", "/nonexistent/file.sqc"])), 2);
    assert_eq!(code(&cxtool(&["npc"])), 2);
    assert_eq!(code(&cxtool(&["npc", "--corpus", "torus", "--input", "x.sqc"])), 2);
    assert_eq!(code(&cxtool(&["npc", "--corpus", "nosuch"])), 2);
    assert_eq!(code(&cxtool(&["frobnicate"])), 2);
}

#[test]
fn malformed_input_is_an_error_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.sqc", "vertex v\nedge a v w\n");
    let (c, v) = json(&["npc", "--input", &bad]);
    assert_eq!(c, 2);
    assert_eq!(v["verdict"], "error");
    assert!(v["error"].as_str().unwrap().contains('w'));
}

#[test]
fn report_schema() {
    let (c, v) = json(&["npc", "--corpus", "torus"]);
    assert_eq!(c, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["check"], "npc");
    assert_eq!(v["verdict"], "pass");
    let digest = v["input_digest"].as_str().unwrap();
    assert_eq!(digest.len(), 64);
    assert!(digest.chars().all(|c| c.is_ascii_hexdigit()));
    assert!(v["certificates"].as_array().unwrap().is_empty());
    assert!(v["timing_ms"].as_f64().unwrap() >= 0.0);
    assert!(v["version"].is_string());
    assert!(v.get("error").is_none());
}

#[test]
fn digest_is_of_the_input_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = cxtool(&["corpus", "torus"]);
    let path = write(dir.path(), "t.sqc", std::str::from_utf8(&corpus.stdout).unwrap());
    let (_, from_file) = json(&["euler", "--input", &path]);
    let (_, from_corpus) = json(&["euler", "--corpus", "torus"]);
    assert_eq!(from_file["input_digest"], from_corpus["input_digest"]);
}

#[test]
fn reports_are_deterministic_up_to_timing() {
    let run = || {
        let (_, mut v) = json(&["sixlarge", "--corpus", "rose_product(2,2)"]);
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    assert_eq!(run(), run());
    let a = cxtool(&["simplexify", "--corpus", "klein"]);
    let b = cxtool(&["simplexify", "--corpus", "klein"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn vh_failure_carries_a_contradiction() {
    let (c, v) = json(&["vh", "--corpus", "K"]);
    assert_eq!(c, 1);
    assert_eq!(v["verdict"], "fail");
    assert_eq!(v["certificates"][0]["kind"], "VhContradiction");
    assert_eq!(v["certificates"][0]["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn swap_exchanges_classes() {
    let (_, v) = json(&["vh", "--corpus", "torus"]);
    let (_, s) = json(&["vh", "--corpus", "torus", "--vclass-swap"]);
    assert_eq!(v["data"]["vertical"], s["data"]["horizontal"]);
    assert_eq!(v["data"]["horizontal"], s["data"]["vertical"]);
}

#[test]
fn certificates_reverify() {
    let dir = tempfile::tempdir().unwrap();
    let hat = cxtool(&["simplexify", "--corpus", "torus", "--hat"]);
    assert_eq!(code(&hat), 0);
    let hat_path = write(dir.path(), "hat.dsc", std::str::from_utf8(&hat.stdout).unwrap());
    let report = cxtool(&["sixlarge", "--input", &hat_path, "--json"]);
    assert_eq!(code(&report), 1);
    let report_text = std::str::from_utf8(&report.stdout).unwrap();
    let report_path = write(dir.path(), "report.json", report_text);
    let (c, v) = json(&["validate", "--input", &hat_path, "--certificate", &report_path]);
    assert_eq!(c, 0, "{v}");
    assert!(v["data"]["verified"].as_u64().unwrap() >= 1);

    let mut tampered: Value = serde_json::from_str(report_text).unwrap();
    let cycle = tampered["certificates"][0]["cycle"].as_array_mut().unwrap();
    cycle.swap(0, 1);
    let tampered_path = write(dir.path(), "tampered.json", &tampered.to_string());
    let (c, v) = json(&["validate", "--input", &hat_path, "--certificate", &tampered_path]);
    assert_eq!(c, 1, "{v}");
    assert_eq!(v["verdict"], "fail");
}

#[test]
fn square_certificates_reverify() {
    let dir = tempfile::tempdir().unwrap();
    let report = cxtool(&["vh", "--corpus", "K", "--json"]);
    let path = write(dir.path(), "vh.json", std::str::from_utf8(&report.stdout).unwrap());
    let (c, _) = json(&["validate", "--corpus", "K", "--certificate", &path]);
    assert_eq!(c, 0);
    let (c, _) = json(&["validate", "--corpus", "torus", "--certificate", &path]);
    assert_eq!(c, 1);
}

#[test]
fn link_dot_for_k() {
    let o = cxtool(&["link", "--corpus", "K", "--vertex", "v", "--dot"]);
    assert_eq!(code(&o), 0);
    let dot = String::from_utf8(o.stdout).unwrap();
    assert!(dot.starts_with("graph \"link v\" {"));
    assert_eq!(dot_counts(&dot), (6, 8));
}

#[test]
fn link_dot_for_torus_is_a_four_cycle() {
    let o = cxtool(&["link", "--corpus", "torus", "--vertex", "v", "--dot"]);
    let dot = String::from_utf8(o.stdout).unwrap();
    assert_eq!(dot_counts(&dot), (4, 4));
    let (_, v) = json(&["link", "--corpus", "torus", "--vertex", "v"]);
    assert_eq!(v["data"]["girth"], 4);
}

#[test]
fn link_dot_for_an_isolated_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "pt.sqc", "vertex p\nvertex q\nedge e q q\n");
    let o = cxtool(&["link", "--input", &path, "--vertex", "p", "--dot"]);
    assert_eq!(code(&o), 0);
    let dot = String::from_utf8(o.stdout).unwrap();
    assert_eq!(dot_counts(&dot), (0, 0));
    assert!(dot.trim_end().ends_with('}'));
}

#[test]
fn link_of_a_delta_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.dsc");
    let out = out.to_str().unwrap();
    assert_eq!(code(&cxtool(&["simplexify", "--corpus", "torus", "--out", out])), 0);
    let (c, v) = json(&["link", "--input", out, "--vertex", "m.b"]);
    assert_eq!(c, 0);
    assert!(!v["data"]["vertices"].as_array().unwrap().is_empty());
    let o = cxtool(&["link", "--input", out, "--vertex", "m.b", "--dot"]);
    assert!(String::from_utf8(o.stdout).unwrap().contains("--"));
}

#[test]
fn simplexify_writes_dsc_and_provenance() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.dsc");
    let prov = dir.path().join("t.json");
    let o = cxtool(&[
        "simplexify",
        "--corpus",
        "torus",
        "--out",
        out.to_str().unwrap(),
        "--provenance",
        prov.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let x = parse_dsc(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(x.f_vector(), vec![3, 10, 9, 2]);
    let table: Value = serde_json::from_str(&std::fs::read_to_string(&prov).unwrap()).unwrap();
    assert_eq!(table.as_object().unwrap().len(), 24);
    assert_eq!(table["m.b"]["tag"], "Midpoint");
}

#[test]
fn simplexify_without_partition_fails_on_k() {
    let (c, v) = json(&["simplexify", "--corpus", "K"]);
    assert_eq!(c, 1);
    assert_eq!(v["certificates"][0]["kind"], "VhContradiction");
}

#[test]
fn sixlarge_on_square_input() {
    assert_eq!(code(&cxtool(&["sixlarge", "--corpus", "klein"])), 0);
    assert_eq!(code(&cxtool(&["sixlarge", "--corpus", "rose_product(1,2)", "--all-simplices"])), 0);
}

#[test]
fn clique_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_cxtool"))
        .args(["sixlarge", "--corpus", "torus", "--json"])
        .env("CXTOOL_CLIQUE_CAP", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "error");
}

#[test]
fn algebraic_invariants() {
    let (_, h) = json(&["homology", "--corpus", "klein"]);
    assert_eq!(h["data"]["betti"], serde_json::json!([1, 1, 0]));
    assert_eq!(h["data"]["torsion"][1], serde_json::json!([2]));
    let (_, e) = json(&["euler", "--corpus", "K"]);
    assert_eq!(e["data"]["euler"], 0);
    let (_, p) = json(&["pi1", "--corpus", "K"]);
    assert_eq!(p["data"]["presentation"]["generators"].as_array().unwrap().len(), 3);
    let (_, a) = json(&["abel", "--corpus", "K"]);
    assert_eq!(a["data"]["abelianization"]["free_rank"], 1);
    assert_eq!(a["data"]["abelianization"]["torsion"], serde_json::json!(["2"]));
}

#[test]
fn covers() {
    let (_, v) = json(&["cover", "--corpus", "K", "--enumerate"]);
    let covers = v["data"]["covers"].as_array().unwrap();
    assert_eq!(covers.len(), 4);
    assert_eq!(covers.iter().filter(|c| c["vh"] == true).count(), 1);

    let dir = tempfile::tempdir().unwrap();
    let labels = write(dir.path(), "l.txt", "label c 1 0\n");
    let out = dir.path().join("cover.sqc");
    let o = cxtool(&["cover", "--corpus", "K", "--labels", &labels, "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let doc = parse_sqc(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc.complex.f_vector(), vec![2, 6, 4]);
    assert!(doc.partition.is_some());
    assert_eq!(code(&cxtool(&["cover", "--corpus", "K"])), 2);
}

#[test]
fn product_of_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let left = write(dir.path(), "l.sqc", "vertex x\nvertex y\nedge e x y\nedge f y x\n");
    let right = write(dir.path(), "r.sqc", "vertex z\nedge g z z\n");
    let o = cxtool(&["product", "--left", &left, "--right", &right]);
    assert_eq!(code(&o), 0);
    let doc = parse_sqc(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert_eq!(doc.complex.f_vector(), vec![2, 4, 2]);
    assert!(doc.partition.is_some());
    let torus = cxtool(&["corpus", "torus"]);
    let sq = write(dir.path(), "t.sqc", std::str::from_utf8(&torus.stdout).unwrap());
    assert_eq!(code(&cxtool(&["product", "--left", &sq, "--right", &right])), 2);
}

#[test]
fn corpus_listing() {
    let o = cxtool(&["corpus", "--list"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().any(|l| l == "K"));
    let o = cxtool(&["corpus", "disk"]);
    let doc = parse_sqc(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert_eq!(doc.complex.f_vector(), vec![4, 4, 1]);
}
