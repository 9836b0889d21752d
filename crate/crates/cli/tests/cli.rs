use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sidedisk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sidedisk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn analyze_star_five() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "star.json", r#"{"preset": {"star": 5}}"#);
    let out = sidedisk(&["analyze", &cfg]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["d"], 5);
    assert_eq!(r["lower_bound"], 3);
    assert_eq!(r["upper_bound"], 5);
    assert_eq!(r["bounds_ok"], true);
    assert_eq!(r["noncrossing_ok"], true);
    assert!(r["min_abs_margin"].as_f64().unwrap() > 0.3);
    assert_eq!(r["red_diagonals"].as_array().unwrap().len(), 0);
    assert_eq!(r["blue_diagonals"].as_array().unwrap().len(), 5);
}

#[test]
fn analyze_triangle_six() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "tri.json", r#"{"preset": {"triangle": 6}}"#);
    let out = sidedisk(&["analyze", &cfg, "--pretty"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["d"], 6);
}

#[test]
fn analyze_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "dup.json", r#"{"angles_radians": [0, 1e-9]}"#);
    let out = sidedisk(&["analyze", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("minimum gap"));

    let cfg = write_config(dir.path(), "bad.json", r#"{"angles": [0, 1]}"#);
    assert_eq!(sidedisk(&["analyze", &cfg]).status.code(), Some(2));
    assert_eq!(
        sidedisk(&["analyze", "/nonexistent/config.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn harness_exit_codes() {
    let out = sidedisk(&["harness", "--n", "4..4", "--trials", "1", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["totals"]["passed"], 1);
    assert_eq!(r["counterexamples"].as_array().unwrap().len(), 0);

    assert_eq!(sidedisk(&["harness", "--n", "2..5"]).status.code(), Some(2));
    assert_eq!(sidedisk(&["harness", "--n", "x..5"]).status.code(), Some(2));
}

#[test]
fn harness_is_reproducible() {
    let args = ["harness", "--n", "3..7", "--trials", "50", "--seed", "11"];
    assert_eq!(sidedisk(&args).stdout, sidedisk(&args).stdout);
}

#[test]
fn lemma_runs() {
    let out = sidedisk(&["lemma", "2b", "--trials", "500", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["failures"], 0);
    assert!(r["worst_residual"].as_f64().unwrap() < 1e-9);

    assert_eq!(
        sidedisk(&["lemma", "step1", "--trials", "500"]).status.code(),
        Some(0)
    );
    assert_eq!(
        sidedisk(&["lemma", "1", "--trials", "5", "--samples", "500"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(sidedisk(&["lemma", "bogus"]).status.code(), Some(2));
}

#[test]
fn witnesses() {
    let out = sidedisk(&["star", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["expected_d"], 9);
    assert_eq!(r["analysis"]["d"], 9);

    let out = sidedisk(&["triangle", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["expected_d"], 10);
    assert_eq!(r["analysis"]["red_diagonals"].as_array().unwrap().len(), 4);

    // the emitted config replays through analyze
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "replay.json", &r["config"].to_string());
    assert_eq!(json(&sidedisk(&["analyze", &cfg]))["d"], 10);

    assert_eq!(sidedisk(&["triangle", "3"]).status.code(), Some(2));
    assert_eq!(sidedisk(&["star", "2"]).status.code(), Some(2));
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "star4.json", r#"{"preset": {"star": 4}}"#);
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for path in [&a, &b] {
        let out = sidedisk(&["render", &cfg, "-o", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let svg = std::fs::read_to_string(&a).unwrap();
    assert_eq!(svg, std::fs::read_to_string(&b).unwrap());
    assert_eq!(svg.matches(r#"class="disk""#).count(), 4);
    assert_eq!(svg.matches(r#"class="chord blue""#).count(), 2);
    assert_eq!(svg.matches(r#"class="chord red""#).count(), 0);

    let out = sidedisk(&["render", &cfg, "-o", "/nonexistent/dir/x.svg"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_tolerance_is_usage_error() {
    let out = sidedisk(&["star", "5", "--tol-geom", "1e-13"]);
    assert_eq!(out.status.code(), Some(2));
}
