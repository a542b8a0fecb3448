//! Rendering of tables and verification reports as aligned text, JSON or
//! CSV.

use clap::ValueEnum;
use qal_core::{Check, Value, VerificationReport};
use serde_json::{json, Map, Value as Json};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Tabular data produced by the listing commands.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub command: String,
    pub params: Vec<(String, Value)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Table {
            command: command.to_string(),
            params: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.push((key.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_json(&self) -> Json {
        let mut obj = Map::new();
        obj.insert("command".into(), json!(self.command));
        for (k, v) in &self.params {
            obj.insert(k.clone(), value_json(v));
        }
        obj.insert("columns".into(), json!(self.columns));
        obj.insert("rows".into(), Json::Array(self.rows.iter().map(|r| Json::Array(r.iter().map(value_json).collect())).collect()));
        Json::Object(obj)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => pretty(&self.to_json()),
            Format::Csv => csv_string(&self.columns, self.rows.iter().map(|r| r.iter().map(value_text).collect())),
            Format::Table => {
                let mut out = String::new();
                out.push_str(&heading(&self.command, &self.params));
                let rows: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(value_text).collect()).collect();
                out.push_str(&aligned(&self.columns, &rows));
                if self.rows.is_empty() {
                    out.push_str("(no rows)\n");
                }
                out
            }
        }
    }
}

/// JSON form of a report value. Integers that do not fit in `i64` are
/// written as decimal strings.
pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Bool(b) => json!(b),
        Value::Int(x) => json!(x),
        Value::Big(x) => json!(x.to_string()),
        Value::Text(s) => json!(s),
        Value::List(items) => Json::Array(items.iter().map(value_json).collect()),
        Value::Map(entries) => Json::Object(entries.iter().map(|(k, v)| (k.clone(), value_json(v))).collect()),
    }
}

/// Plain-text form of a report value.
pub fn value_text(v: &Value) -> String {
    match v {
        Value::Bool(b) => b.to_string(),
        Value::Int(x) => x.to_string(),
        Value::Big(x) => x.to_string(),
        Value::Text(s) => s.clone(),
        Value::List(items) => format!("[{}]", items.iter().map(value_text).collect::<Vec<_>>().join(", ")),
        Value::Map(entries) => {
            format!("{{{}}}", entries.iter().map(|(k, v)| format!("{k}: {}", value_text(v))).collect::<Vec<_>>().join(", "))
        }
    }
}

fn item_json(c: &Check) -> Json {
    let mut obj = Map::new();
    for (k, v) in &c.details {
        obj.insert(k.clone(), value_json(v));
    }
    obj.insert("expected".into(), value_json(&c.expected));
    obj.insert("actual".into(), value_json(&c.actual));
    obj.insert("pass".into(), json!(c.pass()));
    if let Some(p) = &c.payload {
        obj.insert("payload".into(), value_json(p));
    }
    Json::Object(obj)
}

/// `{"check": …, <params>, <item name>: {…, "expected", "actual", "pass"}, "verdict": …}`.
pub fn report_json(r: &VerificationReport) -> Json {
    let mut obj = Map::new();
    obj.insert("check".into(), json!(r.check));
    for (k, v) in &r.params {
        obj.insert(k.clone(), value_json(v));
    }
    for c in &r.items {
        obj.insert(c.name.clone(), item_json(c));
    }
    obj.insert("verdict".into(), json!(r.verdict().as_str()));
    Json::Object(obj)
}

fn details_text(c: &Check) -> String {
    let mut parts: Vec<String> = c.details.iter().map(|(k, v)| format!("{k}={}", value_text(v))).collect();
    if let Some(p) = &c.payload {
        parts.push(format!("payload={}", value_text(p)));
    }
    parts.join("; ")
}

pub fn render_report(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => pretty(&report_json(r)),
        Format::Csv => {
            let columns: Vec<String> =
                ["check", "item", "expected", "actual", "pass", "details"].iter().map(|s| s.to_string()).collect();
            let mut rows: Vec<Vec<String>> = r
                .items
                .iter()
                .map(|c| {
                    vec![
                        r.check.clone(),
                        c.name.clone(),
                        value_text(&c.expected),
                        value_text(&c.actual),
                        c.pass().to_string(),
                        details_text(c),
                    ]
                })
                .collect();
            rows.push(vec![
                r.check.clone(),
                "verdict".into(),
                String::new(),
                r.verdict().as_str().into(),
                r.pass().to_string(),
                String::new(),
            ]);
            csv_string(&columns, rows.into_iter())
        }
        Format::Table => {
            let mut out = heading(&r.check, &r.params);
            let columns: Vec<String> = ["item", "expected", "actual", "result", "details"].iter().map(|s| s.to_string()).collect();
            let rows: Vec<Vec<String>> = r
                .items
                .iter()
                .map(|c| {
                    vec![
                        c.name.clone(),
                        value_text(&c.expected),
                        value_text(&c.actual),
                        if c.pass() { "ok" } else { "FAIL" }.into(),
                        details_text(c),
                    ]
                })
                .collect();
            out.push_str(&aligned(&columns, &rows));
            out.push_str(&format!("verdict: {}\n", r.verdict().as_str()));
            out
        }
    }
}

fn heading(name: &str, params: &[(String, Value)]) -> String {
    if params.is_empty() {
        format!("{name}\n")
    } else {
        let p: Vec<String> = params.iter().map(|(k, v)| format!("{k}={}", value_text(v))).collect();
        format!("{name} ({})\n", p.join(", "))
    }
}

fn aligned(columns: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(columns);
    out.push_str(&line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>()));
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

fn csv_string(columns: &[String], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(columns).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn pretty(v: &Json) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_shape() {
        let mut r = VerificationReport::new("pvh").param("family", "pvb").param("n", 4usize);
        r.push(Check::new("degree2", 36usize, 36usize).detail("relators", 36usize).detail("rank", 36usize));
        let j = report_json(&r);
        assert_eq!(
            j,
            json!({"check": "pvh", "family": "pvb", "n": 4,
                   "degree2": {"relators": 36, "rank": 36, "expected": 36, "actual": 36, "pass": true},
                   "verdict": "PASS"})
        );
    }

    #[test]
    fn csv_has_header_and_quotes() {
        let mut t = Table::new("demo", &["k", "value"]);
        t.push(vec![Value::from(1usize), Value::from("a, b")]);
        assert_eq!(t.render(Format::Csv), "k,value\n1,\"a, b\"\n");
    }

    #[test]
    fn aligned_table() {
        let mut t = Table::new("lah", &["k", "L(n,k)"]).param("n", 2usize);
        t.push(vec![Value::from(1usize), Value::from(2usize)]);
        assert_eq!(t.render(Format::Table), "lah (n=2)\nk  L(n,k)\n-  ------\n1  2\n");
    }
}
