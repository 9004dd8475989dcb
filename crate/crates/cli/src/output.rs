use hopfpi::comodules::{SimplicityVerdict, SubcomoduleFamily};
use hopfpi::{GroupTable, Matrix, Report, Subspace};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::model::{family_json, matrix_json, scalar_json, FileJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Everything a command produces. `structure` is set by commands that build
/// a new structure file.
#[derive(Debug, Default)]
pub struct Outcome {
    pub reports: Vec<Report>,
    pub results: Map<String, Value>,
    pub structure: Option<FileJson>,
    /// A construction refused on mathematical grounds.
    pub refused: bool,
}

impl Outcome {
    pub fn report(&mut self, subject: &str, mut r: Report) {
        if !subject.is_empty() {
            r.subject = format!("{subject}: {}", r.subject);
        }
        self.reports.push(r);
    }

    pub fn set(&mut self, key: &str, v: impl Serialize) {
        self.results.insert(
            key.to_string(),
            serde_json::to_value(v).expect("results serialize"),
        );
    }

    pub fn passed(&self) -> bool {
        !self.refused && self.reports.iter().all(Report::passed)
    }
}

#[derive(Serialize)]
struct Document<'a> {
    command: &'a str,
    passed: bool,
    reports: &'a [Report],
    results: &'a Map<String, Value>,
}

pub fn render(command: &str, o: &Outcome, format: Format) -> String {
    let doc = Document {
        command,
        passed: o.passed(),
        reports: &o.reports,
        results: &o.results,
    };
    match format {
        Format::Json => pretty(&serde_json::to_value(&doc).expect("documents serialize")),
        Format::Text => {
            let mut s = format!("command: {command}\npassed: {}\n", doc.passed);
            for r in &o.reports {
                s.push('\n');
                s.push_str(&r.to_text());
            }
            if !o.results.is_empty() {
                s.push_str("\nresults:\n");
                s.push_str(&pretty(&Value::Object(o.results.clone())));
            }
            s
        }
    }
}

pub fn family(g: &GroupTable, f: &[Matrix]) -> Value {
    serde_json::to_value(family_json(g, f)).expect("families serialize")
}

pub fn matrix(m: &Matrix) -> Value {
    serde_json::to_value(matrix_json(m)).expect("matrices serialize")
}

/// Dimensions keyed by element name.
pub fn dims(g: &GroupTable, d: &[usize]) -> Value {
    Value::Object(
        g.elements()
            .map(|a| (g.name(a).to_string(), json!(d[a])))
            .collect(),
    )
}

/// Basis columns of each component.
pub fn subspaces(g: &GroupTable, s: &[Subspace]) -> Value {
    family(g, &s.iter().map(Subspace::basis_matrix).collect::<Vec<_>>())
}

pub fn subfamily(g: &GroupTable, f: &SubcomoduleFamily) -> Value {
    json!({ "dims": dims(g, &f.dims()), "bases": subspaces(g, &f.components) })
}

pub fn verdict(g: &GroupTable, v: &SimplicityVerdict) -> Value {
    let witness = v.witness.as_ref().map(|w| {
        json!({
            "component": g.name(w.component),
            "seed": w.seed.iter().map(scalar_json).collect::<Vec<_>>(),
            "family": subfamily(g, &w.family),
        })
    });
    json!({
        "simple": v.simple,
        "exactness": v.exactness,
        "seeds_tested": v.seeds_tested,
        "witness": witness,
    })
}

/// Indented JSON that keeps arrays of plain values, such as matrix rows, on
/// one line.
pub fn pretty(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if !items.is_empty() && !is_flat(v) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_stay_on_one_line() {
        let v = json!({"m": [[1, 0], [0, "1/2"]], "e": {}, "l": []});
        let expected =
            "{\n  \"m\": [\n    [1, 0],\n    [0, \"1/2\"]\n  ],\n  \"e\": {},\n  \"l\": []\n}\n";
        assert_eq!(pretty(&v), expected);
    }

    #[test]
    fn pretty_output_parses_back() {
        let v = json!({"a": [{"b": [1, 2]}, null, true], "c": "x"});
        assert_eq!(serde_json::from_str::<Value>(&pretty(&v)).unwrap(), v);
    }
}
