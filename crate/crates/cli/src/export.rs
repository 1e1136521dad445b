//! Text renderings of number triangles and sequences.
//!
//! Every integer is written in full decimal. JSON numbers go through
//! `serde_json`'s arbitrary-precision mode so large entries are exact.

use std::str::FromStr;

use clap::ValueEnum;
use scatalan::Natural;
use serde_json::{json, Number, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

fn number(v: &Natural) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integers are JSON numbers"))
}

fn csv_line(values: &[Natural]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Rows of a triangle. JSON is `{"s": s, "rows": [[...], ...]}`.
pub fn render_triangle(s: u32, rows: &[Vec<Natural>], format: Format) -> String {
    match format {
        Format::Csv => rows.iter().map(|r| csv_line(r) + "\n").collect(),
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| Value::Array(r.iter().map(number).collect()))
                .collect();
            json!({ "s": s, "rows": rows }).to_string() + "\n"
        }
        Format::Table => {
            let width = rows
                .iter()
                .flatten()
                .map(|v| v.to_string().len())
                .chain(std::iter::once(2))
                .max()
                .unwrap_or(2);
            let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
            let n_width = rows.len().saturating_sub(1).to_string().len().max(3);
            let mut out = format!("{:>n_width$}", "n\\k");
            for k in 0..cols {
                out.push_str(&format!(" {k:>width$}"));
            }
            out.push('\n');
            for (n, row) in rows.iter().enumerate() {
                out.push_str(&format!("{n:>n_width$}"));
                for v in row {
                    out.push_str(&format!(" {:>width$}", v.to_string()));
                }
                out.push('\n');
            }
            out
        }
    }
}

/// A sequence indexed from 0. JSON is `{"s": s, "values": [...]}`; CSV is
/// one value per line.
pub fn render_sequence(s: u32, values: &[Natural], format: Format) -> String {
    match format {
        Format::Csv => values.iter().map(|v| format!("{v}\n")).collect(),
        Format::Json => {
            let values: Vec<Value> = values.iter().map(number).collect();
            json!({ "s": s, "values": values }).to_string() + "\n"
        }
        Format::Table => {
            let width = values.len().saturating_sub(1).to_string().len().max(1);
            values
                .iter()
                .enumerate()
                .map(|(n, v)| format!("{n:>width$} {v}\n"))
                .collect()
        }
    }
}

fn parse_natural(text: &str, what: &str) -> Result<Natural, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::Input(format!("{what}: `{text}` is not a nonnegative integer")))
}

/// Inverse of the CSV triangle rendering.
pub fn parse_csv(text: &str) -> Result<Vec<Vec<Natural>>, CliError> {
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            line.split(',')
                .map(|f| parse_natural(f, &format!("line {}", i + 1)))
                .collect()
        })
        .collect()
}

fn naturals(value: &Value) -> Result<Vec<Natural>, CliError> {
    value
        .as_array()
        .ok_or_else(|| CliError::Input("expected a JSON array".into()))?
        .iter()
        .map(|v| match v {
            Value::Number(n) => parse_natural(&n.to_string(), "JSON entry"),
            other => Err(CliError::Input(format!("expected an integer, got {other}"))),
        })
        .collect()
}

fn parse_json_object(text: &str) -> Result<(u32, Value), CliError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    let s = value
        .get("s")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::Input("missing integer field `s`".into()))?;
    Ok((s as u32, value))
}

/// Inverse of the JSON triangle rendering.
pub fn parse_json_triangle(text: &str) -> Result<(u32, Vec<Vec<Natural>>), CliError> {
    let (s, value) = parse_json_object(text)?;
    let rows = value
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Input("missing array field `rows`".into()))?
        .iter()
        .map(naturals)
        .collect::<Result<_, _>>()?;
    Ok((s, rows))
}

/// Inverse of the JSON sequence rendering.
pub fn parse_json_sequence(text: &str) -> Result<(u32, Vec<Natural>), CliError> {
    let (s, value) = parse_json_object(text)?;
    let values = value
        .get("values")
        .ok_or_else(|| CliError::Input("missing array field `values`".into()))?;
    Ok((s, naturals(values)?))
}
