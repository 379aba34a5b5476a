use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nlgame")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let doc = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr)));
    (doc, out.status.code().unwrap())
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nlgame-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn float(v: &Value) -> f64 {
    v.as_str().unwrap().parse().unwrap()
}

#[test]
fn classical_values() {
    let (doc, code) = report(&["classical-value", "--game", "magic-square-r4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["command"], "classical-value");
    assert_eq!(doc["results"]["value"], "8/9");
    assert!(doc["results"]["witness"]["alice"].is_array());
    let (doc, _) = report(&["classical-value", "--game", "chsh"]);
    assert_eq!(doc["results"]["value"], "3/4");
    let (doc, _) = report(&["classical-value", "--game", "magic-square-f8"]);
    assert_eq!(doc["results"]["value"], "8/9");
}

#[test]
fn empty_relation_has_no_witness() {
    let path = temp_file("empty.game", "m_A 2\nm_B 2\nn_A 2\nn_B 2\n");
    let (doc, code) = report(&["classical-value", "--game", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["value"], "0/1");
    assert!(doc["results"]["witness"].is_null());
}

#[test]
fn input_errors_exit_with_two() {
    let path = temp_file("bad.game", "m_A 2\nm_B 2\nn_A 2\nn_B 2\nwin 0 0 5 0\n");
    let out = run(&["classical-value", "--game", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 5, column 9"), "{err}");
    assert_eq!(run(&["classical-value", "--game", "no-such-game"]).status.code(), Some(2));
    assert_eq!(run(&["theorem-2xn", "--game", "magic-square-r4"]).status.code(), Some(2));
    let out = run(&["--budget", "100", "classical-value", "--game", "magic-square-r4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn facet_checks() {
    let (doc, code) = report(&["facet-check", "--expr", "magic-square-r4"]);
    assert_eq!(code, 0);
    let r = &doc["results"];
    assert_eq!((r["vertex_count"].as_u64(), r["rank"].as_u64(), r["dimension"].as_u64()), (Some(144), Some(99), Some(99)));
    assert_eq!(r["verdict"], true);

    let (doc, _) = report(&["facet-check", "--expr", "zero"]);
    assert_eq!(doc["results"]["verdict"], false);
    assert!(doc["results"]["reason"].as_str().unwrap().contains("proper face"));

    let (doc, _) = report(&["facet-check", "--expr", "magic-square-r4", "--params", "3,3,8,8"]);
    assert_eq!(doc["results"]["verdict"], false);
    assert_eq!(doc["results"]["dimension"], 483);
}

#[test]
fn exported_matrix_has_full_rank() {
    let path = temp_file("ms.matrix", "");
    let (_, code) = report(&["facet-check", "--export-matrix", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let m = nlgame::polytope::parse_int_matrix(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!((m.rows(), m.cols()), (144, 99));
    assert_eq!(nlgame::polytope::rank_exact(&m), 99);
}

#[test]
fn quantum_strategies() {
    let (doc, code) = report(&["quantum", "--game", "magic-square-r4"]);
    assert_eq!(code, 0);
    assert!((float(&doc["results"]["winning_probability"]) - 1.0).abs() < 1e-9);
    let terms = doc["results"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 9);
    assert!(terms.iter().all(|t| (float(&t["success"]) - 1.0).abs() < 1e-9));

    let (doc, code) = report(&["quantum", "--game", "chsh"]);
    assert_eq!(code, 0);
    let p = float(&doc["results"]["winning_probability"]);
    assert!((p - (2.0 + 2f64.sqrt()) / 4.0).abs() < 1e-9);
}

#[test]
fn flipped_sign_is_caught() {
    let (doc, code) = report(&["quantum", "--game", "magic-square-r4", "--debug-flip-sign"]);
    assert_eq!(code, 1);
    assert!(float(&doc["results"]["winning_probability"]) < 1.0 - 1e-3);
    assert!(!doc["results"]["invariant_violations"].as_array().unwrap().is_empty());
}

#[test]
fn two_input_criterion() {
    let (doc, _) = report(&["theorem-2xn", "--game", "magic-square-rows01"]);
    assert_eq!(doc["results"]["winnable"], true);
    assert_eq!(doc["results"]["witness"]["b"].as_array().unwrap().len(), 3);
    let (doc, _) = report(&["theorem-2xn", "--game", "chsh"]);
    assert_eq!(doc["results"]["winnable"], false);
    assert!(doc["results"]["statement"].as_str().unwrap().contains("pseudo-telepathy"));

    let mut text = String::from("m_A 2\nm_B 2\nn_A 2\nn_B 2\n");
    for i in 0..16 {
        text += &format!("win {} {} {} {}\n", i >> 3, (i >> 2) & 1, (i >> 1) & 1, i & 1);
    }
    let path = temp_file("full.game", &text);
    let (doc, _) = report(&["theorem-2xn", "--game", path.to_str().unwrap()]);
    assert_eq!(doc["results"]["winnable"], true);
}

#[test]
fn noise_figures() {
    let (doc, code) = report(&["noise"]);
    assert_eq!(code, 0);
    let r = &doc["results"];
    assert_eq!(r["I_noise"], "9/2");
    assert_eq!(r["I_LV"], "8/1");
    assert_eq!(r["p_n_exact"], "2/9");
    assert!((float(&r["comparison_i2244"]["p_n"]) - 0.3272).abs() < 5e-4);

    let (doc, _) = report(&["noise", "--expr", "chsh", "--quantum-value", "3.4142135623730951"]);
    assert!(doc["results"].get("p_n_exact").is_none());
    assert_eq!(run(&["noise", "--expr", "chsh"]).status.code(), Some(2));
}

#[test]
fn reproduction_and_its_negative_control() {
    let (doc, code) = report(&["reproduce-paper"]);
    assert_eq!(code, 0);
    let checks = doc["results"]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["passed"] == true));
    assert!(checks.iter().any(|c| c["observed"] == "p_n = 2/9"));

    let (doc, code) = report(&["reproduce-paper", "--debug-disable-face-guard"]);
    assert_eq!(code, 1);
    let failed: Vec<_> = doc["results"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["id"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(failed, ["zero-expression"]);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["classical-value", "--game", "magic-square-r4"][..],
        &["facet-check"][..],
        &["quantum", "--include-strategy"][..],
        &["noise"][..],
    ] {
        let (mut a, _) = report(args);
        let (mut b, _) = report(args);
        a["elapsed_ms"] = Value::Null;
        b["elapsed_ms"] = Value::Null;
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}

#[test]
fn exports_round_trip() {
    for id in ["magic-square-r4", "chsh", "magic-square-rows01"] {
        let first = run(&["export-game", "--game", id]).stdout;
        let path = temp_file(&format!("{id}.game"), std::str::from_utf8(&first).unwrap());
        let second = run(&["export-game", "--game", path.to_str().unwrap()]).stdout;
        assert_eq!(first, second);
    }
    for id in ["magic-square-f8", "magic-square-abstract4", "zero"] {
        let first = run(&["export-expression", "--expr", id]).stdout;
        let path = temp_file(&format!("{id}.expr"), std::str::from_utf8(&first).unwrap());
        let second = run(&["export-expression", "--expr", path.to_str().unwrap()]).stdout;
        assert_eq!(first, second);
    }
}

#[test]
fn plain_mode_is_a_summary() {
    let out = run(&["--plain", "reproduce-paper"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS") || l.ends_with("checks passed")));
    assert!(text.contains("p_n = 2/9"));
}
