//! Record output in the three formats. Every command produces a list of
//! JSON objects; CSV and pretty output flatten nested fields to dotted keys.

use std::io::Write;

use clap::ValueEnum;
use serde_json::{Map, Value};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    JsonLines,
    Csv,
    Pretty,
}

fn flatten_into(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten_into(&key, x, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

/// Scalars print bare; arrays print as `[a;b;c]` with nested objects as JSON.
fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items
                .iter()
                .map(|x| match x {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect();
            format!("[{}]", parts.join(";"))
        }
        other => other.to_string(),
    }
}

fn flatten(v: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    flatten_into("", v, &mut out);
    out
}

pub fn write_records(
    records: &[Map<String, Value>],
    format: Format,
    w: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::JsonLines => {
            for r in records {
                serde_json::to_writer(&mut *w, r)?;
                w.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let rows: Vec<Vec<(String, String)>> = records
                .iter()
                .map(|r| flatten(&Value::Object(r.clone())))
                .collect();
            let mut header: Vec<String> = Vec::new();
            for row in &rows {
                for (k, _) in row {
                    if !header.contains(k) {
                        header.push(k.clone());
                    }
                }
            }
            let mut cw = csv::Writer::from_writer(&mut *w);
            cw.write_record(&header)?;
            for row in &rows {
                let line = header.iter().map(|h| {
                    row.iter()
                        .find(|(k, _)| k == h)
                        .map_or("", |(_, v)| v.as_str())
                });
                cw.write_record(line)?;
            }
            cw.flush()?;
        }
        Format::Pretty => {
            for r in records {
                let parts: Vec<String> = flatten(&Value::Object(r.clone()))
                    .into_iter()
                    .map(|(k, v)| format!("{k}={}", if v.is_empty() { "-".into() } else { v }))
                    .collect();
                writeln!(w, "{}", parts.join("  "))?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn recs() -> Vec<Map<String, Value>> {
        vec![
            json!({"type": "A", "rank": 4, "coeffs": ["0", "1", "2"], "counts": {"at_0": 1}})
                .as_object()
                .unwrap()
                .clone(),
            json!({"type": "D", "rank": 2, "coeffs": [], "counts": null})
                .as_object()
                .unwrap()
                .clone(),
        ]
    }

    fn render(f: Format) -> String {
        let mut buf = Vec::new();
        write_records(&recs(), f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn json_lines_keep_field_order() {
        let out = render(Format::JsonLines);
        assert_eq!(
            out.lines().next().unwrap(),
            r#"{"type":"A","rank":4,"coeffs":["0","1","2"],"counts":{"at_0":1}}"#
        );
    }

    #[test]
    fn csv_takes_union_of_columns() {
        let out = render(Format::Csv);
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), "type,rank,coeffs,counts.at_0,counts");
        assert_eq!(lines.next().unwrap(), "A,4,[0;1;2],1,");
        assert_eq!(lines.next().unwrap(), "D,2,[],,");
    }

    #[test]
    fn pretty_uses_dashes_for_null() {
        let out = render(Format::Pretty);
        assert!(out.lines().nth(1).unwrap().ends_with("counts=-"));
    }
}
