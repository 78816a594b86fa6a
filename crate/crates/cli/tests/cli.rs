//! Golden-output and exit-code tests for the `lazyq` binary.
//!
//! Set `LAZYQ_BLESS=1` to rewrite the golden files from the current binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn fixture(name: &str) -> String {
    manifest_dir().join("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lazyq")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 output")
}

fn assert_golden(name: &str, args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
    let text = stdout(&out);
    let path = manifest_dir().join("tests/golden").join(name);
    if std::env::var_os("LAZYQ_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(text, expected, "golden mismatch for {name}");
    // Second run must be byte-identical.
    assert_eq!(stdout(&run(args)), text, "non-deterministic output for {name}");
    text
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).expect("valid JSON")
}

#[test]
fn classify_bell_state() {
    let text = assert_golden("classify_bell.json", &["classify", &fixture("bell.json")]);
    let v = json(&text);
    assert_eq!(v["lazy_a"], true);
    assert_eq!(v["discord"], "nonzero");
    assert_eq!(v["separable"], false);
    assert_eq!(v["pure"], true);
}

#[test]
fn classify_maximally_mixed_state() {
    let v = json(&assert_golden("classify_maximally_mixed.json", &["classify", &fixture("maximally_mixed.json")]));
    for key in ["product", "zero_discord_a", "lazy_a", "separable", "physical"] {
        assert_eq!(v[key], true, "{key}");
    }
}

#[test]
fn classify_classical_quantum_state() {
    let v = json(&assert_golden("classify_cq_state.json", &["classify", &fixture("cq_state.json")]));
    assert_eq!(v["discord"], "zero");
    assert_eq!(v["product"], false);
}

#[test]
fn classify_keys_are_sorted_and_fixed() {
    let out = run(&["classify", &fixture("bell.json")]);
    let v = json(&stdout(&out));
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        [
            "discord",
            "discord_direction",
            "lazy_a",
            "physical",
            "product",
            "pure",
            "schmidt",
            "separable",
            "tolerance",
            "version",
            "witnesses",
            "zero_discord_a"
        ]
    );
}

#[test]
fn normal_form_of_lazy_discordant_state() {
    let v = json(&assert_golden("normal_form_lazy_discordant.json", &["normal-form", &fixture("lazy_discordant.json")]));
    let sigma: Vec<f64> = v["sigma"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert!((sigma[0]).abs() < 1e-12 && (sigma[1] - 0.3).abs() < 1e-12 && (sigma[2] - 0.4).abs() < 1e-12);
}

#[test]
fn bd_classify_labels() {
    assert_eq!(stdout(&run(&["bd", "classify", "--lambda", "0,0,0.5"])), "zero_discord\n");
    assert_eq!(stdout(&run(&["bd", "classify", "--lambda", "1,-1,1"])), "pure_vertex\n");
    assert_eq!(stdout(&run(&["bd", "classify", "--lambda", "0.3,-0.3,0.3"])), "lazy_separable_discordant\n");
    assert_eq!(stdout(&run(&["bd", "classify", "--lambda", "-0.6,-0.6,-0.6"])), "lazy_entangled\n");
    assert_eq!(stdout(&run(&["bd", "classify", "--lambda", "0.9,0.9,0.9"])), "unphysical\n");
}

#[test]
fn bd_census_golden() {
    let text = assert_golden("bd_census_20000_seed7.csv", &["bd", "census", "--samples", "20000", "--seed", "7"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# lazyq 0.1.0 bd census seed=7 samples=20000"));
    assert!(lines.next().unwrap().starts_with("# boundary_hits="));
    assert_eq!(lines.next(), Some("label,count,fraction,stderr"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn bd_slice_golden() {
    let text = assert_golden("bd_slice_axis3_value0_grid5.csv", &["bd", "slice", "--axis", "3", "--value", "0", "--grid", "5"]);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 25);
    for row in rows {
        let label = row.rsplit(',').next().unwrap();
        assert!(label == "unphysical" || label == "zero_discord" || label == "lazy_separable_discordant", "{row}");
    }
}

#[test]
fn family_lazy_discordant_round_trips_through_classify() {
    let state = assert_golden("family_lazy_discordant.json", &["family", "lazy-discordant", "--y1", "0.5", "--l2", "0.3", "--l3", "0.4"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ld.json");
    let out = run(&["family", "lazy-discordant", "--y1", "0.5", "--l2", "0.3", "--l3", "0.4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), state);
    let v = json(&stdout(&run(&["classify", path.to_str().unwrap()])));
    assert_eq!(v["lazy_a"], true);
    assert_eq!(v["discord"], "nonzero");
    assert_eq!(v["physical"], true);
}

#[test]
fn family_separable_at_alpha_pi_is_zero_discord() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sep.json");
    let p = path.to_str().unwrap();
    let args = ["family", "separable", "--p", "0.5", "--alpha", "3.14159265", "--beta", "0.5", "--a", "0.3", "--b", "0.7", "--out", p];
    let summary = json(&stdout(&run(&args)));
    assert_eq!(summary["label"], "zero_discord");
    // The typed alpha is 3.6e-9 away from π, so the verdict is read at the same band.
    let v = json(&stdout(&run(&["classify", "--tol", "1e-6", p])));
    assert_eq!(v["discord"], "zero");
    assert_eq!(v["separable"], true);
}

#[test]
fn dynamics_check_bell_state_is_consistent() {
    let v = json(&assert_golden("dynamics_bell.json", &["dynamics-check", &fixture("bell.json"), "--hamiltonians", "20", "--seed", "0"]));
    assert_eq!(v["consistent"], true);
    assert!(v["max_abs_rate"].as_f64().unwrap() <= 1e-6);
    assert_eq!(v["rates"].as_array().unwrap().len(), 20);
}

#[test]
fn dynamics_check_non_lazy_witness_is_consistent() {
    let v = json(&stdout(&run(&["dynamics-check", &fixture("separable_not_lazy.json")])));
    assert_eq!(v["lazy"], false);
    assert_eq!(v["consistent"], true);
    assert!(v["max_abs_rate"].as_f64().unwrap() > 1e-3);
}

#[test]
fn help_documents_radians() {
    let out = run(&["family", "separable", "--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("radians"));
}

fn assert_exit(args: &[&str], code: i32) -> Output {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}: stderr {}", stderr(&out));
    out
}

#[test]
fn exit_code_contract() {
    // 0
    assert_exit(&["classify", &fixture("maximally_mixed.json")], 0);

    // 1: invalid state or family parameters
    let out = assert_exit(&["classify", &fixture("trace_09.json")], 1);
    assert!(stderr(&out).contains("trace deviates"));
    assert!(stdout(&out).is_empty());
    let out = assert_exit(&["dynamics-check", &fixture("near_unphysical.json")], 1);
    assert!(stderr(&out).contains("min eigenvalue"));
    let out = assert_exit(&["family", "lazy-discordant", "--y1", "0.9", "--l2", "0.3", "--l3", "0.4"], 1);
    assert!(stderr(&out).contains("y1^2 + (lambda3 + lambda2)^2 <= 1"));
    assert_exit(&["family", "lazy-discordant", "--y1", "0.1", "--l2", "0.4", "--l3", "0.3"], 1);
    assert_exit(&["family", "separable", "--p", "0.5", "--alpha", "4", "--beta", "0", "--a", "0", "--b", "0"], 1);

    // 2: parse or usage
    assert_exit(&["classify", &fixture("malformed.json")], 2);
    assert_exit(&["classify", "/nonexistent/state.json"], 2);
    assert_exit(&["bd", "classify", "--lambda", "0,0"], 2);
    assert_exit(&["bd", "classify", "--lambda", "2,0,0"], 2);
    assert_exit(&["bd", "slice", "--axis", "4", "--value", "0", "--grid", "5"], 2);
    assert_exit(&["bd", "census", "--samples", "0"], 2);
    assert_exit(&["dynamics-check", &fixture("bell.json"), "--step", "1"], 2);
    assert_exit(&["no-such-command"], 2);

    // 3: consistency failure; the gray-zone state is non-lazy but its rates are tiny.
    let out = assert_exit(&["dynamics-check", &fixture("gray_zone.json"), "--hamiltonians", "5"], 3);
    assert!(stderr(&out).contains("gray zone"));
    assert_eq!(json(&stdout(&out))["consistent"], false);
}

#[test]
fn fixtures_exist() {
    for name in ["bell.json", "maximally_mixed.json", "gray_zone.json", "trace_09.json"] {
        assert!(Path::new(&fixture(name)).exists(), "{name}");
    }
}
