//! Input parsing: sampled tables (CSV or JSON) and sequences (line-per-value
//! or JSON).
//!
//! Tables accept `x`/`f` columns as decimals or `log_x`/`log_f` columns as
//! exact exponents, so nodes like e^1.2 enter without rounding through exp.
//! Sequences are one positive decimal per line (with an optional `tail: one`
//! line marking an all-1s tail) or JSON: a bare array, or an object with
//! `values` or `log_values` plus an optional `"tail": "one"`.

use crate::config::InputFormat;
use crate::error::CliError;
use geocalc_core::{GNum, GSeq, GTable};
use serde_json::Value;

enum Coordinate {
    Real,
    Log,
}

impl Coordinate {
    fn to_gnum(&self, v: f64) -> Result<GNum, CliError> {
        match self {
            Coordinate::Real => Ok(GNum::from_real(v)?),
            Coordinate::Log => Ok(GNum::from_exponent(v)?),
        }
    }
}

/// Parses a sampled table and validates geometric equidistance.
pub fn parse_table(
    source: &str,
    format: InputFormat,
    spacing_tolerance: f64,
) -> Result<GTable, CliError> {
    let (nodes, values) = match format {
        InputFormat::Csv => parse_table_csv(source)?,
        InputFormat::Json => parse_table_json(source)?,
    };
    Ok(GTable::new(nodes, values, spacing_tolerance)?)
}

fn parse_table_csv(source: &str) -> Result<(Vec<GNum>, Vec<GNum>), CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(source.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CliError::parse(format!("bad CSV header: {e}")))?
        .clone();
    if headers.len() != 2 {
        return Err(CliError::parse(format!(
            "expected two CSV columns, got {}",
            headers.len()
        )));
    }
    let node_coordinate = match &headers[0] {
        "x" => Coordinate::Real,
        "log_x" => Coordinate::Log,
        other => {
            return Err(CliError::parse(format!(
                "first column must be 'x' or 'log_x', got {other:?}"
            )))
        }
    };
    let value_coordinate = match &headers[1] {
        "f" => Coordinate::Real,
        "log_f" => Coordinate::Log,
        other => {
            return Err(CliError::parse(format!(
                "second column must be 'f' or 'log_f', got {other:?}"
            )))
        }
    };
    let mut nodes = Vec::new();
    let mut values = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::parse(format!("row {}: {e}", row + 2)))?;
        if record.len() != 2 {
            return Err(CliError::parse(format!(
                "row {}: expected 2 fields, got {}",
                row + 2,
                record.len()
            )));
        }
        nodes.push(node_coordinate.to_gnum(parse_number(&record[0], row + 2)?)?);
        values.push(value_coordinate.to_gnum(parse_number(&record[1], row + 2)?)?);
    }
    Ok((nodes, values))
}

fn parse_number(field: &str, row: usize) -> Result<f64, CliError> {
    field
        .parse::<f64>()
        .map_err(|_| CliError::parse(format!("row {row}: {field:?} is not a number")))
}

fn parse_table_json(source: &str) -> Result<(Vec<GNum>, Vec<GNum>), CliError> {
    let value: Value =
        serde_json::from_str(source).map_err(|e| CliError::parse(format!("bad JSON: {e}")))?;
    let object = value
        .as_object()
        .ok_or_else(|| CliError::parse("table JSON must be an object"))?;
    let (node_key, node_coordinate) = match (object.contains_key("nodes"), object.contains_key("log_x")) {
        (true, false) => ("nodes", Coordinate::Real),
        (false, true) => ("log_x", Coordinate::Log),
        _ => {
            return Err(CliError::parse(
                "table JSON needs exactly one of \"nodes\" or \"log_x\"",
            ))
        }
    };
    let (value_key, value_coordinate) =
        match (object.contains_key("values"), object.contains_key("log_f")) {
            (true, false) => ("values", Coordinate::Real),
            (false, true) => ("log_f", Coordinate::Log),
            _ => {
                return Err(CliError::parse(
                    "table JSON needs exactly one of \"values\" or \"log_f\"",
                ))
            }
        };
    let nodes = number_array(&object[node_key], node_key)?
        .into_iter()
        .map(|v| node_coordinate.to_gnum(v))
        .collect::<Result<Vec<_>, _>>()?;
    let values = number_array(&object[value_key], value_key)?
        .into_iter()
        .map(|v| value_coordinate.to_gnum(v))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((nodes, values))
}

fn number_array(value: &Value, key: &str) -> Result<Vec<f64>, CliError> {
    value
        .as_array()
        .ok_or_else(|| CliError::parse(format!("\"{key}\" must be an array")))?
        .iter()
        .map(|v| {
            v.as_f64()
                .ok_or_else(|| CliError::parse(format!("\"{key}\" holds a non-number: {v}")))
        })
        .collect()
}

/// Parses a sequence from either input format.
pub fn parse_sequence(source: &str, format: InputFormat) -> Result<GSeq, CliError> {
    match format {
        InputFormat::Csv => parse_sequence_lines(source),
        InputFormat::Json => sequence_from_json(
            &serde_json::from_str::<Value>(source)
                .map_err(|e| CliError::parse(format!("bad JSON: {e}")))?,
        ),
    }
}

fn parse_sequence_lines(source: &str) -> Result<GSeq, CliError> {
    let mut entries = Vec::new();
    let mut finite_tail = false;
    for (idx, line) in source.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let compact: String = line
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_lowercase();
        if compact == "tail:one" || compact == "tail=one" {
            finite_tail = true;
            continue;
        }
        let v: f64 = line
            .parse()
            .map_err(|_| CliError::parse(format!("line {}: {line:?} is not a number", idx + 1)))?;
        entries.push(GNum::from_real(v)?);
    }
    if entries.is_empty() {
        return Err(CliError::parse("sequence input has no entries"));
    }
    Ok(GSeq::new(entries, finite_tail)?)
}

fn sequence_from_json(value: &Value) -> Result<GSeq, CliError> {
    match value {
        Value::Array(_) => {
            let entries = number_array(value, "sequence")?
                .into_iter()
                .map(GNum::from_real)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(GSeq::new(entries, false)?)
        }
        Value::Object(object) => {
            let finite_tail = match object.get("tail") {
                None => false,
                Some(Value::String(s)) if s == "one" => true,
                Some(other) => {
                    return Err(CliError::parse(format!(
                        "\"tail\" must be the string \"one\", got {other}"
                    )))
                }
            };
            let entries = match (object.get("values"), object.get("log_values")) {
                (Some(vs), None) => number_array(vs, "values")?
                    .into_iter()
                    .map(GNum::from_real)
                    .collect::<Result<Vec<_>, _>>()?,
                (None, Some(ts)) => number_array(ts, "log_values")?
                    .into_iter()
                    .map(GNum::from_exponent)
                    .collect::<Result<Vec<_>, _>>()?,
                _ => {
                    return Err(CliError::parse(
                        "sequence JSON needs exactly one of \"values\" or \"log_values\"",
                    ))
                }
            };
            Ok(GSeq::new(entries, finite_tail)?)
        }
        _ => Err(CliError::parse(
            "sequence JSON must be an array or an object",
        )),
    }
}

/// Parses the identity-check input: a `{"a": ..., "b": ...}` object runs the
/// Abel check on the pair; a single sequence runs the tail-sum identity.
pub fn parse_pair(source: &str, format: InputFormat) -> Result<(GSeq, Option<GSeq>), CliError> {
    match format {
        InputFormat::Csv => Ok((parse_sequence_lines(source)?, None)),
        InputFormat::Json => {
            let value: Value = serde_json::from_str(source)
                .map_err(|e| CliError::parse(format!("bad JSON: {e}")))?;
            if let Some(object) = value.as_object() {
                if object.contains_key("a") {
                    let a = sequence_from_json(&object["a"])?;
                    let b = object
                        .get("b")
                        .map(sequence_from_json)
                        .transpose()?;
                    return Ok((a, b));
                }
            }
            Ok((sequence_from_json(&value)?, None))
        }
    }
}
