//! Rendering of command results as JSON, CSV or an aligned text table.

use clap::ValueEnum;
use serde_json::{Map, Value};

pub const SCHEMA: &str = "lenticulus/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Rows of strings under fixed headers.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    /// One `key,value` row per top-level field of a JSON object. Nested
    /// values are written as compact JSON.
    pub fn key_values(v: &Value) -> Self {
        let mut t = Table::new(&["key", "value"]);
        if let Value::Object(m) = v {
            for (k, v) in m {
                t.push(vec![k.clone(), scalar(v)]);
            }
        }
        t
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Shortest decimal that reads back to the same `f64`, in exponent form
/// for very small or very large magnitudes; `nan`, `inf` and `-inf` for
/// non-finite values.
pub fn num(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else if x != 0.0 && (x.abs() < 1e-4 || x.abs() >= 1e16) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

/// A JSON document (sorted keys) and its tabular view.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub table: Table,
}

impl Report {
    /// Wraps `body`, which must be a JSON object, adding the schema tag and
    /// the command name.
    pub fn new(command: &str, body: Value, table: Option<Table>) -> Self {
        let mut m = match body {
            Value::Object(m) => m,
            other => {
                let mut m = Map::new();
                m.insert("result".into(), other);
                m
            }
        };
        m.insert("schema".into(), Value::String(SCHEMA.into()));
        m.insert("command".into(), Value::String(command.into()));
        let json = Value::Object(m);
        let table = table.unwrap_or_else(|| Table::key_values(&json));
        Report { json, table }
    }

    pub fn render(&self, format: Format) -> Result<String, csv::Error> {
        Ok(match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.table.headers)?;
                for r in &self.table.rows {
                    w.write_record(r)?;
                }
                let bytes = w.into_inner().map_err(|e| e.into_error())?;
                String::from_utf8(bytes).expect("CSV of UTF-8 fields is UTF-8")
            }
            Format::Table => render_aligned(&self.table),
        })
    }
}

fn render_aligned(t: &Table) -> String {
    let mut width: Vec<usize> = t.headers.iter().map(|h| h.chars().count()).collect();
    for r in &t.rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let parts: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&t.headers);
    out.push_str(&line(&width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>()));
    for r in &t.rows {
        out.push_str(&line(r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn schema_and_sorted_keys() {
        let r = Report::new("demo", json!({"zeta": 1, "alpha": 2.5}), None);
        let s = r.render(Format::Json).unwrap();
        assert!(s.contains("\"schema\": \"lenticulus/1\""));
        let a = s.find("alpha").unwrap();
        let z = s.find("zeta").unwrap();
        assert!(a < z);
        let csv = r.render(Format::Csv).unwrap();
        assert!(csv.starts_with("key,value\n"));
        assert!(csv.contains("alpha,2.5\n"));
    }

    #[test]
    fn aligned() {
        let mut t = Table::new(&["n", "value"]);
        t.push(vec!["615".into(), "1.5".into()]);
        let r = Report::new("demo", json!({}), Some(t));
        let s = r.render(Format::Table).unwrap();
        assert_eq!(s, "n    value\n---  -----\n615  1.5\n");
    }

    #[test]
    fn numbers() {
        assert_eq!(num(0.1), "0.1");
        assert_eq!(num(f64::NAN), "nan");
        assert_eq!(num(2.5e-16), "2.5e-16");
        assert_eq!(num(0.0), "0");
        assert_eq!(num(f64::NEG_INFINITY), "-inf");
    }
}
