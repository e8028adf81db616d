use std::fmt::Write as _;

use num::BigInt;
use serde_json::{Map, Value};
use weightnorm::numeric::{approx_decimal, format_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Debug)]
pub enum Cell {
    Rat(Rational),
    Int(BigInt),
    Text(String),
    Bool(bool),
}

impl From<Rational> for Cell {
    fn from(r: Rational) -> Self {
        Cell::Rat(r)
    }
}

impl From<BigInt> for Cell {
    fn from(n: BigInt) -> Self {
        Cell::Int(n)
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Self {
        Cell::Int(n.into())
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n.into())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl Cell {
    fn json(&self) -> Value {
        match self {
            Cell::Rat(r) => Value::String(format_rational(r)),
            Cell::Int(n) => match i64::try_from(n.clone()) {
                Ok(v) => Value::from(v),
                Err(_) => Value::String(n.to_string()),
            },
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }

    fn plain(&self) -> String {
        match self {
            Cell::Rat(r) => format_rational(r),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn pretty(&self, approx: bool) -> String {
        match self {
            Cell::Rat(r) => {
                let exact = if r.is_integer() { r.to_integer().to_string() } else { r.to_string() };
                if approx && !r.is_integer() {
                    format!("{exact} ≈ {}", approx_decimal(r, 6))
                } else {
                    exact
                }
            }
            other => other.plain(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Scalar fields followed by zero or more named tables.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub fields: Vec<(String, Cell)>,
    pub tables: Vec<(String, Table)>,
}

impl Report {
    pub fn field(&mut self, key: &str, value: impl Into<Cell>) {
        self.fields.push((key.to_string(), value.into()));
    }

    pub fn table(&mut self, name: &str, table: Table) {
        self.tables.push((name.to_string(), table));
    }

    pub fn render(&self, format: Format, approx: bool) -> String {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Pretty => self.pretty(approx),
        }
    }

    fn json(&self) -> String {
        let mut obj = Map::new();
        for (k, v) in &self.fields {
            obj.insert(k.clone(), v.json());
        }
        for (name, t) in &self.tables {
            let rows = t
                .rows
                .iter()
                .map(|row| Value::Object(t.columns.iter().cloned().zip(row.iter().map(Cell::json)).collect()))
                .collect();
            obj.insert(name.clone(), Value::Array(rows));
        }
        serde_json::to_string_pretty(&Value::Object(obj)).expect("report serializes") + "\n"
    }

    /// Tables when there are any (blank-line separated), otherwise the
    /// fields as a single row.
    fn csv(&self) -> String {
        let mut blocks = Vec::new();
        if self.tables.is_empty() {
            let header: Vec<String> = self.fields.iter().map(|(k, _)| k.clone()).collect();
            let row: Vec<String> = self.fields.iter().map(|(_, v)| v.plain()).collect();
            blocks.push(csv_block(&header, &[row]));
        }
        for (_, t) in &self.tables {
            let rows: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(Cell::plain).collect()).collect();
            blocks.push(csv_block(&t.columns, &rows));
        }
        blocks.join("\n")
    }

    fn pretty(&self, approx: bool) -> String {
        let mut out = String::new();
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.fields {
            writeln!(out, "{k:<width$}  {}", v.pretty(approx)).unwrap();
        }
        for (name, t) in &self.tables {
            writeln!(out, "\n{name}:").unwrap();
            let cells: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(|c| c.pretty(approx)).collect()).collect();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|i| cells.iter().map(|r| r[i].chars().count()).chain([t.columns[i].len()]).max().unwrap())
                .collect();
            let line = |vals: Vec<&str>| -> String {
                let padded: Vec<String> =
                    vals.iter().zip(&widths).map(|(v, w)| format!("{v:>w$}", w = *w)).collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", line(t.columns.iter().map(String::as_str).collect())).unwrap();
            for r in &cells {
                writeln!(out, "{}", line(r.iter().map(String::as_str).collect())).unwrap();
            }
        }
        out
    }
}

pub fn csv_block(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}
