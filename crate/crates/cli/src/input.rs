//! Input parsing: matrices from CSV or JSON documents, inline scalar lists,
//! and the `kind:params:N[:start]` sequence-spec grammar.

use genchar_core::{Matrix, Mode, Scalar, SequenceSpec, Vector};
use serde_json::Value;

use crate::CliError;

/// Matrix file formats:
///  (a) CSV: one row per line, comma-separated entries, `p/q` literals
///      allowed in exact mode;
///  (b) JSON: `{"data": [[...]], "rows": r, "cols": c, "mode": "exact"}`
///      with numeric or string entries; `rows`/`cols`/`mode` optional.
pub fn parse_matrix_text(text: &str, mode: Mode) -> Result<Matrix, CliError> {
    if text.trim_start().starts_with('{') {
        parse_matrix_json(text, mode)
    } else {
        parse_matrix_csv(text, mode)
    }
}

/// The mode a JSON document asks for, if any.
pub fn file_mode(text: &str) -> Result<Option<Mode>, CliError> {
    if !text.trim_start().starts_with('{') {
        return Ok(None);
    }
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("invalid JSON document: {e}")))?;
    match doc.get("mode") {
        None | Some(Value::Null) => Ok(None),
        Some(Value::String(s)) => parse_mode(s).map(Some),
        Some(other) => Err(CliError::Parse(format!(
            "mode field must be a string, got {other}"
        ))),
    }
}

pub fn parse_mode(s: &str) -> Result<Mode, CliError> {
    match s {
        "exact" => Ok(Mode::Exact),
        "float" => Ok(Mode::Float),
        other => Err(CliError::Parse(format!(
            "mode must be `exact` or `float`, got `{other}`"
        ))),
    }
}

fn parse_matrix_csv(text: &str, mode: Mode) -> Result<Matrix, CliError> {
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for (col_no, field) in trimmed.split(',').enumerate() {
            let value = Scalar::parse(field, mode).map_err(|_| {
                CliError::Parse(format!(
                    "line {}, column {}: invalid number `{}`",
                    line_no + 1,
                    col_no + 1,
                    field.trim()
                ))
            })?;
            row.push(value);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Parse("no rows found in matrix file".into()));
    }
    let width = rows[0].len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != width {
            return Err(CliError::Core(genchar_core::Error::Shape(format!(
                "ragged rows: row 1 has {width} entries, row {} has {}",
                i + 1,
                row.len()
            ))));
        }
    }
    Matrix::from_rows(rows).map_err(CliError::Core)
}

fn parse_matrix_json(text: &str, mode: Mode) -> Result<Matrix, CliError> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("invalid JSON document: {e}")))?;
    let data = doc
        .get("data")
        .ok_or_else(|| CliError::Parse("JSON matrix document needs a `data` field".into()))?;
    let outer = data
        .as_array()
        .ok_or_else(|| CliError::Parse("`data` must be an array of rows".into()))?;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (i, row) in outer.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| CliError::Parse(format!("`data` row {} is not an array", i + 1)))?;
        let mut parsed = Vec::new();
        for (j, cell) in cells.iter().enumerate() {
            parsed.push(
                parse_json_scalar(cell, mode)
                    .map_err(|msg| CliError::Parse(format!("data[{}][{}]: {msg}", i, j)))?,
            );
        }
        rows.push(parsed);
    }
    if rows.is_empty() {
        return Err(CliError::Parse("JSON matrix document has no rows".into()));
    }
    if let Some(r) = doc.get("rows").and_then(Value::as_u64) {
        if r as usize != rows.len() {
            return Err(CliError::Core(genchar_core::Error::Shape(format!(
                "document says {} rows but data has {}",
                r,
                rows.len()
            ))));
        }
    }
    if let Some(c) = doc.get("cols").and_then(Value::as_u64) {
        if rows.iter().any(|row| row.len() != c as usize) {
            return Err(CliError::Core(genchar_core::Error::Shape(format!(
                "document says {c} cols but data rows disagree"
            ))));
        }
    }
    let width = rows[0].len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != width {
            return Err(CliError::Core(genchar_core::Error::Shape(format!(
                "ragged rows: row 1 has {width} entries, row {} has {}",
                i + 1,
                row.len()
            ))));
        }
    }
    Matrix::from_rows(rows).map_err(CliError::Core)
}

fn parse_json_scalar(cell: &Value, mode: Mode) -> Result<Scalar, String> {
    match cell {
        Value::String(s) => Scalar::parse(s, mode).map_err(|e| e.to_string()),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Scalar::from_int(i, mode))
            } else if let Some(f) = n.as_f64() {
                match mode {
                    Mode::Float => Ok(Scalar::Float(f)),
                    Mode::Exact => Scalar::parse(&format!("{f}"), mode).map_err(|e| e.to_string()),
                }
            } else {
                Err(format!("unrepresentable number {n}"))
            }
        }
        other => Err(format!("expected number or string, got {other}")),
    }
}

/// Comma-separated scalar list, e.g. `--lambda 1,2,3` or `1/2,-3,0.25`.
pub fn parse_scalar_list(text: &str, mode: Mode) -> Result<Vector, CliError> {
    let mut entries = Vec::new();
    for (i, field) in text.split(',').enumerate() {
        entries.push(Scalar::parse(field, mode).map_err(|_| {
            CliError::Parse(format!(
                "entry {}: invalid number `{}`",
                i + 1,
                field.trim()
            ))
        })?);
    }
    Vector::new(entries).map_err(CliError::Core)
}

/// Sequence-spec grammar: `kind:params:N[:start]` where kind is `explicit`,
/// `harmonic` (params: scale) or `power` (params: scale,ratio).
pub fn parse_sequence_spec(text: &str, mode: Mode) -> Result<SequenceSpec, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() < 3 || parts.len() > 4 {
        return Err(CliError::Usage(format!(
            "sequence spec must be kind:params:N[:start], got `{text}`"
        )));
    }
    let n_max: usize = parts[2]
        .parse()
        .map_err(|_| CliError::Parse(format!("invalid N `{}` in sequence spec", parts[2])))?;
    let start: usize = match parts.get(3) {
        Some(s) => s
            .parse()
            .map_err(|_| CliError::Parse(format!("invalid start `{s}` in sequence spec")))?,
        None => 1,
    };
    if start == 0 {
        return Err(CliError::Parse("sequence start must be at least 1".into()));
    }
    let params = parse_scalar_list(parts[1], mode)?;
    let spec = match parts[0] {
        "explicit" => {
            let values: Vec<Scalar> = params.entries().to_vec();
            SequenceSpec::explicit(values)
                .map_err(CliError::Core)?
                .with_n_max(n_max.min(params.len()))
        }
        "harmonic" => {
            if params.len() != 1 {
                return Err(CliError::Usage(
                    "harmonic spec takes exactly one parameter (scale)".into(),
                ));
            }
            SequenceSpec::harmonic(params.get(0).clone())
                .with_start(start)
                .with_n_max(n_max)
        }
        "power" => {
            if params.len() != 2 {
                return Err(CliError::Usage(
                    "power spec takes exactly two parameters (scale, ratio)".into(),
                ));
            }
            SequenceSpec::power(params.get(0).clone(), params.get(1).clone())
                .with_start(start)
                .with_n_max(n_max)
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown sequence kind `{other}` (explicit, harmonic, power)"
            )))
        }
    };
    Ok(spec)
}

/// Canonical CSV form of a matrix (round-trips through the CSV parser).
pub fn serialize_matrix_csv(m: &Matrix) -> String {
    let mut out = String::new();
    for i in 0..m.n_rows() {
        let row: Vec<String> = (0..m.n_cols()).map(|j| m.get(i, j).to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Canonical JSON form of a matrix (round-trips through the JSON parser).
pub fn serialize_matrix_json(m: &Matrix) -> Value {
    let data: Vec<Value> = (0..m.n_rows())
        .map(|i| {
            Value::Array(
                (0..m.n_cols())
                    .map(|j| crate::output::scalar_to_value(m.get(i, j)))
                    .collect(),
            )
        })
        .collect();
    serde_json::json!({
        "rows": m.n_rows(),
        "cols": m.n_cols(),
        "mode": m.mode().to_string(),
        "data": data,
    })
}
