//! Every built-in example validates against the documented file schema, and
//! the schema rejects what the loader rejects for shape reasons.

use std::process::Command;

use serde_json::{json, Value};

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../docs/structure.schema.json"
    ))
    .unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn example(name: &str, field: &str) -> Value {
    let o = Command::new(env!("CARGO_BIN_EXE_hopfpi"))
        .args(["example", name, "--field", field])
        .output()
        .unwrap();
    assert!(o.status.success(), "{name}");
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn examples_match_the_schema() {
    let v = schema();
    for name in [
        "trivial",
        "inversion-z3",
        "taft",
        "group-algebra-pair",
        "taft-quotient",
        "taft-left-quotient",
        "taft-isolated",
    ] {
        let file = example(name, "GF(7)");
        let errors: Vec<String> = v.iter_errors(&file).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{name}: {errors:?}");
    }
    assert!(v.is_valid(&example("inversion-z3", "Q")));
}

#[test]
fn schema_rejects_malformed_files() {
    let v = schema();
    let group = json!({"elements": ["1"], "table": [["1"]]});
    assert!(v.is_valid(&json!({"field": "Q", "group": group})));
    assert!(!v.is_valid(&json!({"field": "Q"})));
    assert!(!v.is_valid(&json!({"field": "GF(7", "group": group})));
    assert!(!v.is_valid(&json!({"field": "Q", "group": group, "extra": {}})));
    let bad_scalar = json!({"pair": "P", "rho": [["1/x"]]});
    assert!(!v.is_valid(&json!({"field": "Q", "group": group, "coactions": {"r": bad_scalar}})));
    let fraction = json!({"pair": "P", "rho": [["-3/4"], [2]]});
    assert!(v.is_valid(&json!({"field": "Q", "group": group, "coactions": {"r": fraction}})));
}
