//! The result document every command emits: command echo, mode, status,
//! payload and timing. Exact scalars serialize as canonical `p/q` strings,
//! floats as shortest round-trip JSON numbers.

use genchar_core::{DivergenceReport, Matrix, Scalar, Vector};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Serialize)]
pub struct ResultDocument {
    pub command: String,
    pub mode: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payload: Option<Value>,
    pub timing_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}

impl ResultDocument {
    pub fn ok(command: &str, mode: &str, payload: Value, timing_ms: f64) -> Self {
        ResultDocument {
            command: command.to_string(),
            mode: mode.to_string(),
            status: "ok".into(),
            error: None,
            payload: Some(payload),
            timing_ms,
        }
    }

    pub fn error(command: &str, mode: &str, kind: &str, message: &str, exit_code: i32) -> Self {
        ResultDocument {
            command: command.to_string(),
            mode: mode.to_string(),
            status: "error".into(),
            error: Some(ErrorInfo {
                kind: kind.into(),
                message: message.into(),
                exit_code,
            }),
            payload: None,
            timing_ms: 0.0,
        }
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

pub fn scalar_to_value(s: &Scalar) -> Value {
    match s {
        Scalar::Exact(_) => Value::String(s.to_string()),
        Scalar::Float(x) => json!(x),
    }
}

pub fn vector_to_value(v: &Vector) -> Value {
    Value::Array(v.iter().map(scalar_to_value).collect())
}

pub fn matrix_to_value(m: &Matrix) -> Value {
    let data: Vec<Value> = (0..m.n_rows())
        .map(|i| {
            Value::Array(
                (0..m.n_cols())
                    .map(|j| scalar_to_value(m.get(i, j)))
                    .collect(),
            )
        })
        .collect();
    json!({
        "rows": m.n_rows(),
        "cols": m.n_cols(),
        "data": data,
    })
}

pub fn report_to_value(r: &DivergenceReport) -> Value {
    json!({
        "values": r.values.iter().map(scalar_to_value).collect::<Vec<_>>(),
        "truncations": r.truncations,
        "degenerate_truncations": r.degenerate_truncations,
        "monotone_nondecreasing": r.monotone_nondecreasing,
        "threshold": scalar_to_value(&r.threshold),
        "verdict": r.verdict.to_string(),
        "crossing_index": r.crossing_index,
        "certified_sup": r.certified_sup.as_ref().map(scalar_to_value),
    })
}
