use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn cfdyn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfdyn"))
        .args(args)
        .env_remove("CFDYN_CONFIG")
        .output()
        .expect("binary runs")
}

fn cfdyn_with_config(config: &str, args: &[&str]) -> Output {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(config.as_bytes()).unwrap();
    Command::new(env!("CARGO_BIN_EXE_cfdyn"))
        .args(args)
        .env("CFDYN_CONFIG", f.path())
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

const SMALL: &str = "samples = 300\nseed = 4\nepsilon = 1e-9\ngrid = 80\n";

#[test]
fn expand_zero_terminates() {
    let out = cfdyn(&["expand", "0", "--steps", "3", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["digits"], serde_json::json!(["0+0i"]));
    assert_eq!(v["terminated"], true);
}

#[test]
fn expand_float_literal() {
    let out = cfdyn(&[
        "expand",
        "1.4142135+1.7320508i",
        "--steps",
        "40",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["carrier"], "float");
    assert_eq!(v["digits"].as_array().unwrap().len(), 40);
    for r in v["residuals"].as_array().unwrap().iter().take(10) {
        assert!(r.as_f64().unwrap() < 1e-9);
    }
}

#[test]
fn expand_accepts_negative_literals_and_hurwitz() {
    let out = cfdyn(&[
        "expand",
        "-7/3+1/2i",
        "--algorithm",
        "hurwitz",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["algorithm"], "hurwitz");
    assert_eq!(v["carrier"], "exact");
    assert_eq!(v["terminated"], true);
    assert!(v["residuals"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r.as_f64() == Some(0.0)));
}

#[test]
fn parse_errors_name_the_token() {
    let out = cfdyn(&["expand", "2+3j"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("3j") || err.contains("2+3j"), "{err}");
    assert_eq!(
        cfdyn(&["expand", "1", "--steps", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn classify_output_shape() {
    let out = cfdyn(&["classify", "1/10+3/10i", "--format", "json"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let (i, d, k) = (
        text.find("\"input\"").unwrap(),
        text.find("\"dih\"").unwrap(),
        text.find("\"k\"").unwrap(),
    );
    assert!(i < d && d < k, "{text}");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["k"], 5);
    assert_eq!(cfdyn(&["classify", "0"]).status.code(), Some(2));
}

#[test]
fn orbit_rules() {
    let out = cfdyn(&["orbit", "1/2", "1/3"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rational"));

    let out = cfdyn(&[
        "orbit", "0.1+0.2i", "2.5+0.3i", "--steps", "3", "--format", "json",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["first_entry"]["v"], 0);

    let out = cfdyn(&[
        "orbit",
        "10+10i",
        "1.41421+1.73205i",
        "--steps",
        "500",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!(v["first_entry"]["v"].as_u64().is_some());
    assert_eq!(v["trace"].as_array().unwrap().len(), 501);
}

#[test]
fn verify_reports_are_deterministic_and_valid() {
    let schema: Value =
        serde_json::from_str(include_str!("../../../schemas/verify-report.schema.json")).unwrap();
    let validator = jsonschema::JSONSchema::compile(&schema).unwrap();
    for suite in ["partition", "trapping", "identities"] {
        let a = cfdyn_with_config(SMALL, &["verify", suite]);
        let b = cfdyn_with_config(SMALL, &["verify", suite]);
        assert_eq!(
            a.status.code(),
            Some(0),
            "{suite}: {}",
            String::from_utf8_lossy(&a.stdout)
        );
        assert_eq!(a.stdout, b.stdout, "{suite}");
        let v = stdout_json(&a);
        assert!(validator.is_valid(&v), "{suite}");
        assert_eq!(v["seed"], 4);
        assert!(v.get("elapsed_ms").is_none());
    }
    let timed = cfdyn_with_config(SMALL, &["verify", "trapping", "--timings", "--seed", "9"]);
    let v = stdout_json(&timed);
    assert!(v["elapsed_ms"].is_u64());
    assert_eq!(v["seed"], 9);
    assert!(validator.is_valid(&v));
}

#[test]
fn bad_config_is_a_usage_error() {
    let out = cfdyn_with_config("samples = \"many\"\n", &["verify", "trapping"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn render_io_failure() {
    let out = cfdyn(&["render", "regions", "--out", "/nonexistent/dir/regions.svg"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn render_z1hat_snapshot() {
    let out = cfdyn(&["render", "z1hat"]);
    assert!(out.status.success());
    let expected = include_bytes!("snapshots/z1hat.svg");
    assert!(out.stdout == expected, "z1hat render changed");
}

#[test]
fn render_all_figures_to_files() {
    let dir = tempfile::tempdir().unwrap();
    for fig in ["regions", "partition", "dne", "z1hat", "psi"] {
        let path = dir.path().join(format!("{fig}.svg"));
        let out = cfdyn(&["render", fig, "--out", path.to_str().unwrap()]);
        assert!(out.status.success(), "{fig}");
        let svg = std::fs::read_to_string(&path).unwrap();
        assert!(
            svg.starts_with("<svg") && svg.ends_with("</svg>\n"),
            "{fig}"
        );
        assert!(svg.contains("class=\"cell\""), "{fig}");
    }
}
