//! Runs the `hopfpi` binary on emitted examples and checks exit codes and
//! report contents.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hopfpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfpi"))
        .args(args)
        .env_remove("HOPFPI_DEFAULT_FIELD")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn example(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    let o = hopfpi(&[
        "example",
        name,
        "--field",
        "GF(7)",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn report(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn failing_diagrams(doc: &Value) -> Vec<String> {
    let mut out = Vec::new();
    for r in doc["reports"].as_array().unwrap() {
        for c in r["checks"].as_array().unwrap() {
            if c["passed"] == false {
                out.push(c["diagram"].as_str().unwrap().to_string());
            }
        }
    }
    out
}

#[test]
fn verify_passes_on_the_taft_mirror() {
    let dir = TempDir::new().unwrap();
    let path = example(dir.path(), "taft");
    let o = hopfpi(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let doc = report(&o);
    assert_eq!(doc["command"], "verify");
    assert_eq!(doc["passed"], true);
}

#[test]
fn perturbed_antipode_fails_with_named_diagram() {
    let dir = TempDir::new().unwrap();
    let path = example(dir.path(), "taft");
    let mut file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    // S(g) at the identity component: add 1 to the coefficient of 1
    let entry = &mut file["hopf"]["H"]["antipode"]["1"][0][3];
    *entry = Value::from(entry.as_i64().unwrap() + 1);
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
    let o = hopfpi(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let failing = failing_diagrams(&report(&o));
    assert!(
        failing.iter().any(|d| d.contains("antipode")),
        "{failing:?}"
    );
}

#[test]
fn unknown_command_is_a_usage_error() {
    assert_eq!(code(&hopfpi(&["frobnicate"])), 2);
}

#[test]
fn composite_modulus_is_an_input_error() {
    let o = hopfpi(&["example", "trivial", "--field", "GF(8)"]);
    assert_eq!(code(&o), 2);
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"field": "GF(8)", "group": {"elements": ["1"], "table": [["1"]]}}"#,
    )
    .unwrap();
    let o = hopfpi(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("field"));
}

#[test]
fn truncated_file_reports_its_position() {
    let dir = TempDir::new().unwrap();
    let path = example(dir.path(), "inversion-z3");
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, &text[..text.len() / 3]).unwrap();
    let o = hopfpi(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at line"));
}

#[test]
fn missing_file_is_an_input_error() {
    assert_eq!(code(&hopfpi(&["verify", "/nonexistent/structure.json"])), 2);
}

#[test]
fn equivalence_refusal_exits_one_with_residual() {
    let dir = TempDir::new().unwrap();
    let path = example(dir.path(), "group-algebra-pair");
    let p = path.to_str().unwrap();
    let o = hopfpi(&[
        "equiv", p, "--from", "trivial", "--to", "sign", "--map", "[[1]]",
    ]);
    assert_eq!(code(&o), 1);
    let doc = report(&o);
    assert_eq!(doc["passed"], false);
    assert_eq!(doc["results"]["residual"], serde_json::json!([[6], [1]]));
    let o = hopfpi(&[
        "equiv",
        p,
        "--from",
        "trivial",
        "--to",
        "trivial",
        "--map",
        "[[3]]",
        "--coinduced",
    ]);
    assert_eq!(code(&o), 0);
}

#[test]
fn mismatched_map_shape_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let path = example(dir.path(), "group-algebra-pair");
    let o = hopfpi(&[
        "equiv",
        path.to_str().unwrap(),
        "--from",
        "trivial",
        "--to",
        "sign",
        "--map",
        "[[1, 2]]",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn out_flag_and_text_reports() {
    let dir = TempDir::new().unwrap();
    let path = example(dir.path(), "group-algebra-pair");
    let out = dir.path().join("report.txt");
    let o = hopfpi(&[
        "induce",
        path.to_str().unwrap(),
        "--coaction",
        "trivial",
        "--report",
        "text",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.starts_with("command: induce\npassed: true\n"));
    assert!(text.contains("pass action closes"));
}

#[test]
fn default_field_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_hopfpi"))
        .args(["example", "inversion-z3"])
        .env("HOPFPI_DEFAULT_FIELD", "GF(5)")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let file: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(file["field"], "GF(5)");
}

#[test]
fn quotient_writes_a_verifiable_file() {
    let dir = TempDir::new().unwrap();
    let path = example(dir.path(), "taft-isolated");
    let q = dir.path().join("q.json");
    let o = hopfpi(&[
        "quotient",
        path.to_str().unwrap(),
        "--hopf",
        "H",
        "--coideal",
        "nilpotent",
        "--hopf-quotient",
        "--name",
        "E",
        "--pair",
        "Q",
        "--out",
        q.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    assert_eq!(
        report(&o)["results"]["dims"],
        serde_json::json!({"1": 3, "x": 3, "x^2": 3})
    );
    let o = hopfpi(&["verify", q.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
}

#[test]
fn mirror_rebuilds_the_emitted_family() {
    let dir = TempDir::new().unwrap();
    let path = example(dir.path(), "inversion-z3");
    let o = hopfpi(&[
        "mirror",
        path.to_str().unwrap(),
        "--classical",
        "A",
        "--action",
        "inversion",
        "--name",
        "M",
    ]);
    assert_eq!(code(&o), 0);
    let file: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(file["hopf"]["M"], file["hopf"]["H"]);
}
