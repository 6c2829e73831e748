//! End-to-end tests of the `bergec5` binary: exit code contract
//! (0 pass/free, 1 check failed/contains, 2 input error), JSON output
//! shapes and the canonical round-trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bergec5"))
}

fn tmpdir() -> tempfile::TempDir {
    tempfile::tempdir().expect("create temp dir")
}

fn write(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

const K4_3: &str = "4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n";

#[test]
fn analyze_passes_on_k4_3() {
    let dir = tmpdir();
    let file = write(&dir, "k4.h3", K4_3);
    let out = run(&["analyze", file.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["c5_free"], true);
    assert_eq!(v["decomposition"]["k4s"], 1);
    assert_eq!(v["decomposition"]["claim6"]["holds"], true);
}

#[test]
fn check_exit_codes_and_witness() {
    let dir = tmpdir();
    let file = write(&dir, "k4.h3", K4_3);
    let free = run(&["check", "--pattern", "c5", file.to_str().unwrap()]);
    assert_eq!(free.status.code(), Some(0));

    let contains = run(&["check", "--pattern", "c2", file.to_str().unwrap(), "--json"]);
    assert_eq!(contains.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&contains.stdout).unwrap();
    assert_eq!(v["contains"], true);
    assert!(v["witness"]["emap"].as_array().unwrap().len() == 2);

    let path = run(&["check", "--pattern", "path:2", file.to_str().unwrap()]);
    assert_eq!(path.status.code(), Some(1));
}

#[test]
fn parse_errors_exit_2_with_line_numbers() {
    let dir = tmpdir();
    let file = write(&dir, "bad.h3", "3 2\n0 1 2\n0 1\n");
    let out = run(&["analyze", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "stderr: {err}");

    let missing = run(&["analyze", "/definitely/not/here.h3"]);
    assert_eq!(missing.status.code(), Some(2));

    let unknown = run(&["check", "--pattern", "q7", file.to_str().unwrap()]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn gen_output_reparses_to_canonical_form() {
    let dir = tmpdir();
    let out_path = dir.path().join("gen.h3");
    let out = run(&["gen", "--n", "12", "--seed", "3", "-o", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with('#'), "generated files carry a header comment");
    let parsed = bergec5::io::parse_h3(&text).unwrap();
    // canonical body round-trips byte-identically
    let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    assert_eq!(bergec5::io::write_h3(&parsed.hypergraph), body);
    // and the generated instance is C5-free
    let check = run(&["check", "--pattern", "c5", out_path.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn construct_counts_and_freeness() {
    let dir = tmpdir();
    let out_path = dir.path().join("q3.h3");
    let out = run(&["construct", "--q", "3", "-o", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let parsed = bergec5::io::read_h3(&out_path).unwrap();
    assert_eq!(parsed.hypergraph.n(), 39);
    assert_eq!(parsed.hypergraph.edge_count(), 52);
    let check = run(&["check", "--pattern", "c5", out_path.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));

    let bad_q = run(&["construct", "--q", "4", "-o", out_path.to_str().unwrap()]);
    assert_eq!(bad_q.status.code(), Some(2));
}

#[test]
fn structure_and_decompose_emit_json() {
    let dir = tmpdir();
    let file = write(&dir, "k4.h3", K4_3);
    let s = run(&["structure", file.to_str().unwrap()]);
    assert_eq!(s.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&s.stdout).unwrap();
    assert_eq!(v["blocks"].as_array().unwrap().len(), 1);
    assert_eq!(v["fat_pairs"], 6);

    let d = run(&["decompose", file.to_str().unwrap(), "--json"]);
    assert_eq!(d.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&d.stdout).unwrap();
    assert_eq!(v["k4s"], 1);
    assert_eq!(v["claim6"]["holds"], true);
}

#[test]
fn verify_subsets_of_claims() {
    let dir = tmpdir();
    let file = write(&dir, "k4.h3", K4_3);
    for claims in ["all", "8", "8,9", "13"] {
        let out = run(&["verify", file.to_str().unwrap(), "--claims", claims]);
        assert_eq!(out.status.code(), Some(0), "claims {claims}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["c5_free"], true);
        assert!(!v["claims"].as_array().unwrap().is_empty());
    }
    // a hypergraph with a Berge-C5 fails verification with the witness
    let c5 = write(
        &dir,
        "c5.h3",
        "10 5\n0 1 5\n1 2 6\n2 3 7\n3 4 8\n0 4 9\n",
    );
    let out = run(&["verify", c5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["c5_free"], false);
    assert!(v["witness"].is_object());
}

#[test]
fn bound_json_and_svg() {
    let dir = tmpdir();
    let svg_path = dir.path().join("curve.svg");
    let out = run(&["bound", "--grid", "0.01", "--svg", svg_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let max = v["bound"]["maximum"].as_f64().unwrap();
    assert!(max > 0.2534 && max < 0.2536);
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));

    let bad = run(&["bound", "--grid", "0.5"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn search_json_and_threads_flag() {
    let out = run(&["search", "--n", "5", "--json", "--budget", "60s"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["m_star"], 5);
    assert_eq!(v["result"]["exact"], true);

    // --threads and BERGE_THREADS give the same (deterministic) answer
    let t1 = bin()
        .args(["search", "--n", "5", "--json", "--threads", "1"])
        .output()
        .unwrap();
    let t8 = bin()
        .args(["search", "--n", "5", "--json"])
        .env("BERGE_THREADS", "8")
        .output()
        .unwrap();
    let v1: serde_json::Value = serde_json::from_slice(&t1.stdout).unwrap();
    let v8: serde_json::Value = serde_json::from_slice(&t8.stdout).unwrap();
    assert_eq!(v1["result"]["m_star"], v8["result"]["m_star"]);
    assert_eq!(v1["result"]["witness"], v8["result"]["witness"]);
    assert_eq!(v1["result"]["nodes_explored"], v8["result"]["nodes_explored"]);
}

#[test]
fn analyze_text_summary_mentions_pass() {
    let dir = tmpdir();
    let file = write(&dir, "k4.h3", K4_3);
    let out = run(&["analyze", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("result: PASS"));
}
