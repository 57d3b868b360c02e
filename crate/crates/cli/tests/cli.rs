use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_barut-kit")).args(args).env_remove("BARUT_KIT_CONFIG").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn temp_json(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn leptons_defaults() {
    let out = kit(&["leptons"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["schema"], "barut-kit/1");
    assert!((v["tau"].as_f64().unwrap() - 1786.08).abs() < 0.01);
    assert!((v["muon"].as_f64().unwrap() - 105.55).abs() < 0.01);
    assert_eq!(v["electron"].as_f64().unwrap(), 0.511);
}

#[test]
fn leptons_constant_sensitivity() {
    let v = json(&kit(&["leptons", "--alpha-inverse", "137.0359895"]));
    assert!((v["tau"].as_f64().unwrap() - 1786.16).abs() < 0.01);
}

#[test]
fn output_is_deterministic_and_sorted() {
    let a = kit(&["spectrum", "--a", "1.3", "--b", "0.4", "--m", "0.7"]);
    let b = kit(&["spectrum", "--a", "1.3", "--b", "0.4", "--m", "0.7"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let top: Vec<&str> = text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim().split('"').nth(1).unwrap()).collect();
    let mut sorted = top.clone();
    sorted.sort();
    assert_eq!(top, sorted);
    assert!(text.contains("\"params\": {\n    \"a\": 1.3,"));
}

#[test]
fn spectrum_dirac_limit() {
    let v = json(&kit(&["spectrum", "--a", "1", "--b", "0", "--m", "1"]));
    let masses = v["masses"].as_array().unwrap();
    assert_eq!(masses.len(), 1);
    assert_eq!(masses[0]["mass"].as_f64().unwrap(), 1.0);
    assert_eq!(masses[0]["multiplicity"], 8);
}

#[test]
fn spectrum_split() {
    let v = json(&kit(&["spectrum", "--a", "1", "--b", "0.5", "--m", "1"]));
    let mut m: Vec<f64> = v["masses"].as_array().unwrap().iter().map(|s| s["mass"].as_f64().unwrap()).collect();
    m.sort_by(f64::total_cmp);
    assert_eq!(m, vec![0.5, 1.5]);
}

#[test]
fn spectrum_third_order() {
    let out = kit(&["spectrum", "--third-order", "--a", "1", "--b1", "0.3", "--b2", "0.2", "--m", "1", "--branch", "++"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let d: Vec<f64> = v["distinct_masses"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert_eq!(d.len(), 3);
    for (x, y) in d.iter().zip([0.7, 1.3, 1.5]) {
        assert!((x - y).abs() < 1e-10);
    }
}

#[test]
fn spectrum_csv() {
    let out = kit(&["spectrum", "--a", "1", "--b", "0.5", "--m", "1", "--output", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("mass,numeric,multiplicity,branch,residual"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&kit(&["spectrum", "--a", "0", "--b", "0.5", "--m", "1"])), 2);
    assert_eq!(code(&kit(&["spectrum", "--a", "1", "--m", "-1"])), 2);
    assert_eq!(code(&kit(&["spectrum", "--b", "0.5"])), 2);
    assert_eq!(code(&kit(&["frobnicate"])), 2);
    assert_eq!(code(&kit(&["verify", "--suite", "nothing"])), 2);
    assert_eq!(code(&kit(&["verify", "--suite", "algebra", "--output", "csv"])), 2);
    assert_eq!(code(&kit(&["fgm-check", "--field", "dipole"])), 2);
    assert_eq!(code(&kit(&["invariants", "/nonexistent/modes.json"])), 2);
    assert_eq!(code(&kit(&["leptons", "--tolerance", "0.1"])), 2);
}

#[test]
fn invariants_empty_set() {
    let f = temp_json(r#"{"L": 4.0, "m": 1.0, "modes": []}"#);
    let v = json(&kit(&["invariants", f.path().to_str().unwrap()]));
    assert_eq!(v["report"]["hamiltonian"], serde_json::json!([0, 0]));
    assert_eq!(v["report"]["charge"], serde_json::json!([0, 0]));
}

#[test]
fn invariants_single_dirac_mode() {
    let f = temp_json(r#"{"L": 8.0, "m": 1.0, "modes": [{"n": [0, 2, 0], "h": -0.5, "a": [0.6, 0.8], "b": [0.0, 0.0]}]}"#);
    let out = kit(&["invariants", f.path().to_str().unwrap(), "--quadrature", "16"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let k = 2.0 * std::f64::consts::PI * 2.0 / 8.0;
    let e2 = k * k + 1.0;
    let h = v["report"]["hamiltonian"][0].as_f64().unwrap();
    assert!((h - e2 / 512.0).abs() < 1e-14, "{h}");
    assert!(v["quadrature"]["relative_deviation"].as_f64().unwrap() < 1e-10);
}

#[test]
fn invariants_default_box() {
    let f = temp_json(r#"{"m": 2.0, "modes": []}"#);
    let v = json(&kit(&["invariants", f.path().to_str().unwrap()]));
    assert_eq!(v["modes"]["L"].as_f64().unwrap(), 8.0);
}

#[test]
fn transform_majorana_imaginary() {
    let out = kit(&["transform", "--rep", "majorana"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["max_real_part"].as_f64().unwrap() < 1e-12);
    assert!(v["unitarity_defect"].as_f64().unwrap() < 1e-12);
    assert!(v["conjugation"]["U C U^T + 1"].as_f64().unwrap() < 1e-12);
}

#[test]
fn fgm_check_families() {
    for family in ["free", "constant", "uniform"] {
        let out = kit(&["fgm-check", "--field", family]);
        assert_eq!(code(&out), 0, "{family}");
        let v = json(&out);
        for r in v["representations"].as_array().unwrap() {
            assert!(r["identity_residual"].as_f64().unwrap() < 1e-10);
        }
    }
}

#[test]
fn verify_algebra_lines() {
    let out = kit(&["verify", "--suite", "algebra"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "Clifford relations: PASS"));
    assert!(text.contains("[algebra]"));
}

#[test]
fn verify_noether_names_alpha3() {
    let out = kit(&["verify", "--suite", "noether"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout).unwrap().lines().any(|l| l == "alpha3 charge term vanishes: PASS"));
}

#[test]
fn corrupted_unitary_fails() {
    let out = kit(&["verify", "--suite", "majorana", "--corrupt-unitary"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8(out.stderr).unwrap().contains("Majorana U unitary"));
}

#[test]
fn verify_json() {
    let v = json(&kit(&["verify", "--suite", "fgm", "--output", "json"]));
    assert_eq!(v["failed"], 0);
    assert_eq!(v["suites"][0]["suite"], "fgm");
}

#[test]
fn config_file_and_env_override() {
    let modern = temp_json(r#"{"alpha_inverse": 137.0359895}"#);
    let historical = temp_json(r#"{"alpha_inverse": 137.03}"#);
    let v = json(&kit(&["--config", modern.path().to_str().unwrap(), "leptons"]));
    assert!((v["tau"].as_f64().unwrap() - 1786.16).abs() < 0.01);
    let out = Command::new(env!("CARGO_BIN_EXE_barut-kit"))
        .args(["--config", modern.path().to_str().unwrap(), "leptons"])
        .env("BARUT_KIT_CONFIG", historical.path())
        .output()
        .unwrap();
    assert!((json(&out)["tau"].as_f64().unwrap() - 1786.08).abs() < 0.01);
}

#[test]
fn config_rejects_bad_values() {
    let f = temp_json(r#"{"electron_mass_mev": -1}"#);
    assert_eq!(code(&kit(&["--config", f.path().to_str().unwrap(), "leptons"])), 2);
    let g = temp_json(r#"{"unknown": 1}"#);
    assert_eq!(code(&kit(&["--config", g.path().to_str().unwrap(), "leptons"])), 2);
}
