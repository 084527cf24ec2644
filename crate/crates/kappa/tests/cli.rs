//! End-to-end tests of the binary: formats, exit codes, determinism.

use std::path::Path;
use std::process::{Command, Output};

fn kappa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kappa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, content: &str) -> String {
    let path = std::env::temp_dir().join(format!("kappa-cli-test-{name}"));
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn compute_on_multipartite_edge_list() {
    // G_{2,3} as an edge list
    let mut lines = String::from("6\n");
    for u in 0..6usize {
        for v in u + 1..6 {
            if u / 2 != v / 2 {
                lines.push_str(&format!("{u} {v}\n"));
            }
        }
    }
    let path = write_temp("g23.el", &lines);
    let out = kappa(&["compute", &path, "--format", "json", "--oracle"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["schema_version"], "1");
    assert_eq!(json["report"]["kappa"], 4);
    assert_eq!(json["report"]["kappa_prime"], 3);
    assert_eq!(json["report"]["kappa_q"], 4);
    assert_eq!(json["report"]["qss_threshold"], 5);
}

#[test]
fn compute_on_single_vertex() {
    let path = write_temp("one.el", "1\n");
    let out = kappa(&["compute", &path, "--format", "json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["report"]["kappa"], 0);
    assert_eq!(json["report"]["kappa_prime"], 1);
    assert_eq!(json["report"]["kappa_q"], 0);
}

#[test]
fn compute_accepts_inline_graph6() {
    let out = kappa(&["compute", "Bw", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("kappa"), "{text}");
}

#[test]
fn malformed_input_exits_1() {
    let path = write_temp("bad.el", "3\n0 1\n0 seven\n");
    let out = kappa(&["compute", &path]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn size_cap_exits_2() {
    let big = kappa::graph6::encode(&kappa::graph::Graph::cycle(40));
    let out = kappa(&["compute", &big]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_cap_env_var_and_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_kappa"))
        .args(["compute", "Bw"])
        .env("KAPPA_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // the flag overrides the environment
    let out = Command::new(env!("CARGO_BIN_EXE_kappa"))
        .args(["compute", "Bw", "--max-n", "3"])
        .env("KAPPA_MAX_N", "2")
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn json_report_round_trips() {
    let out = kappa(&["compute", "Bw", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let report: kappa::ParamReport = serde_json::from_value(value["report"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), value["report"]);
}

#[test]
fn deterministic_witness_output_is_byte_identical() {
    let a = kappa(&["compute", "DQc", "--format", "json", "--deterministic-witness"]);
    let b = kappa(&["compute", "DQc", "--format", "json", "--deterministic-witness"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn family_multipartite_expect_passes() {
    let out_path = std::env::temp_dir().join("kappa-cli-test-g33.g6");
    let out = kappa(&[
        "family",
        "multipartite",
        "-p",
        "3",
        "-q",
        "3",
        "--expect",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let written = std::fs::read_to_string(&out_path).unwrap();
    let g = kappa::graph6::decode(written.trim()).unwrap();
    assert_eq!(g, kappa::graph::Graph::complete_multipartite(3, 3).unwrap());
}

#[test]
fn family_rejects_zero_parts() {
    let out = kappa(&["family", "multipartite", "-p", "0", "-q", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn family_copies_from_base_file() {
    let base = write_temp("k3.g6", "Bw\n");
    let out = kappa(&["family", "copies", "--base", &base, "-r", "2"]);
    assert!(out.status.success());
    let g = kappa::graph6::decode(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert_eq!(g.n(), 6);
    assert_eq!(g.component_count(), 2);
}

#[test]
fn verify_suites_pass() {
    for suite in ["duality", "copies", "dichotomy"] {
        let out = kappa(&["verify", suite, "--nmax", "4", "--samples", "5"]);
        assert!(
            out.status.success(),
            "{suite}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
        assert!(String::from_utf8_lossy(&out.stdout).contains("ok"));
    }
}

#[test]
fn reduce_with_check_passes_and_writes_sidecar() {
    let k4 = write_temp("k4.g6", "C~\n");
    let out_path = std::env::temp_dir().join("kappa-cli-test-inst.g6");
    let out = kappa(&[
        "reduce",
        "pc-to-kappa-ge",
        &k4,
        "--check",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let sidecar_path = format!("{}.json", out_path.display());
    assert!(Path::new(&sidecar_path).exists());
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(sidecar_path).unwrap()).unwrap();
    assert_eq!(sidecar["k"], 3);
    assert_eq!(sidecar["check"]["agrees"], true);
}

#[test]
fn reduce_to_qkappa_inline() {
    let c5 = kappa::graph6::encode(&kappa::graph::Graph::cycle(5));
    let out = kappa(&["reduce", "to-qkappa", &c5, "-k", "2", "--check"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let sidecar: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(sidecar["k"], 8);
    assert_eq!(sidecar["check"]["agrees"], true);
}

#[test]
fn reduce_rejects_non_cubic_input() {
    let c5 = kappa::graph6::encode(&kappa::graph::Graph::cycle(5));
    let out = kappa(&["reduce", "pc-to-kappa-ge", &c5]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("3-regular"));
}
