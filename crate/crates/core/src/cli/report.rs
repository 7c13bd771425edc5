use serde_json::{json, Map, Value};

use crate::cone::BudgetSpent;
use crate::matrix::Matrix2;
use crate::poly::Polynomial;
use crate::preserver::{MembershipVerdict, TrailEntry};
use crate::rational::Rational;

/// One result: ordered fields rendered either as a JSON object or as
/// `key: value` lines, plus the process exit code it maps to.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    fields: Vec<(String, Value)>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(p: &Polynomial, class: &str, status: &str, exit_code: i32) -> Self {
        let mut r = Report {
            fields: Vec::new(),
            exit_code,
        };
        r.push("input", Value::Array(p.coeffs().iter().map(exact).collect()));
        r.push("class", class.into());
        r.push("status", status.into());
        r
    }

    /// A line of a batch file that failed to parse.
    pub fn parse_failure(line: &str, message: String) -> Self {
        Report {
            fields: vec![
                ("source".into(), line.into()),
                ("status".into(), "error".into()),
                ("error".into(), message.into()),
            ],
            exit_code: super::EXIT_USAGE,
        }
    }

    pub fn push(&mut self, key: &str, value: Value) {
        self.fields.push((key.to_string(), value));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn status(&self) -> &str {
        self.get("status").and_then(Value::as_str).unwrap_or("")
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.fields.iter().cloned().collect::<Map<_, _>>())
    }

    pub fn to_text(&self) -> String {
        self.fields
            .iter()
            .map(|(k, v)| format!("{k}: {}\n", text(v)))
            .collect()
    }
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(text).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", text(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

pub fn exact(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn matrix(m: &Matrix2) -> Value {
    Value::Array(m.entries.iter().map(|row| Value::Array(row.iter().map(exact).collect())).collect())
}

pub fn point((a, b): &(Rational, Rational)) -> Value {
    json!([exact(a), exact(b)])
}

pub fn polynomial(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(exact).collect())
}

/// `{i, j, value}` with 1-based indices.
pub fn negative_entry(entry: &(usize, usize, Rational)) -> Value {
    json!({ "i": entry.0 + 1, "j": entry.1 + 1, "value": exact(&entry.2) })
}

fn trail_entry(e: &TrailEntry) -> Value {
    let mut m = Map::new();
    m.insert("condition".into(), e.condition.as_str().into());
    m.insert("status".into(), e.status_label().into());
    if let Some(w) = &e.witness {
        m.insert("witness".into(), exact(w));
    }
    Value::Object(m)
}

pub fn budget(b: &BudgetSpent) -> Value {
    json!({ "grid_points": b.grid_points, "grid_level": b.grid_level, "boxes": b.boxes })
}

pub fn membership(p: &Polynomial, v: &MembershipVerdict) -> Report {
    let mut r = Report::new(p, v.class_checked.as_str(), v.status.as_str(), v.status.exit_code());
    r.push("trail", Value::Array(v.certificate_trail.iter().map(trail_entry).collect()));
    if let Some(cert) = v.ratio_certificate() {
        r.push("ratio_certificate", cert.name().into());
    }
    if let Some(note) = v.ratio.as_ref().and_then(|x| x.note.as_ref()) {
        r.push("note", note.as_str().into());
    }
    if let Some(pt) = &v.witness_point {
        r.push("witness_point", point(pt));
    }
    if let Some(a) = &v.witness_matrix {
        r.push("witness_matrix", matrix(a));
    }
    if let Some(entry) = v.image_negative_entry(p) {
        r.push("image_negative_entry", negative_entry(&entry));
    }
    r.push("budget_spent", budget(&v.budget_spent));
    r
}
