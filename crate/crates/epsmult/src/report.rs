//! Deterministic CSV and JSON rendering.
//!
//! A report is a config object, an ordered list of named tables and a few
//! summary lines. CSV output starts with `# config: <json>` and prints each
//! table as a header line followed by its rows; later tables are introduced
//! by `# section: <name>` and summary lines are `# ` comments. JSON output
//! holds the same data. Map keys are sorted, so both forms are byte-stable.

use std::fmt::Write as _;

use epsmult_core::{BigInt, BigRational};
use serde_json::{json, Map, Value};

pub const DECIMAL_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Int(BigInt),
    Text(String),
    Bool(bool),
    Empty,
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v.into())
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v.into())
    }
}

impl From<u128> for Cell {
    fn from(v: u128) -> Self {
        Cell::Int(v.into())
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v.into())
    }
}

impl From<BigInt> for Cell {
    fn from(v: BigInt) -> Self {
        Cell::Int(v)
    }
}

impl From<&epsmult_core::BigUint> for Cell {
    fn from(v: &epsmult_core::BigUint) -> Self {
        Cell::Int(BigInt::from(v.clone()))
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
            Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => match i64::try_from(v) {
                Ok(small) => Value::from(small),
                Err(_) => Value::String(v.to_string()),
            },
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Empty => Value::Null,
        }
    }
}

/// The numerator and denominator cells of a reduced rational.
pub fn ratio_cells(r: &BigRational) -> [Cell; 2] {
    [Cell::Int(r.numer().clone()), Cell::Int(r.denom().clone())]
}

/// `r` rounded half away from zero to [`DECIMAL_DIGITS`] places.
pub fn decimal(r: &BigRational) -> String {
    let zero = BigInt::from(0);
    let negative = *r.numer() < zero;
    let num = if negative { -r.numer().clone() } else { r.numer().clone() };
    let scale = BigInt::from(10u64).pow(DECIMAL_DIGITS as u32);
    let den = r.denom();
    let scaled = (num * &scale * 2 + den) / (den * 2);
    let int: BigInt = &scaled / &scale;
    let frac: BigInt = &scaled % &scale;
    let frac = frac.to_string();
    let sign = if negative && scaled != zero { "-" } else { "" };
    format!("{sign}{int}.{frac:0>width$}", width = DECIMAL_DIGITS)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: impl Into<String>, columns: &[&'static str]) -> Self {
        Table { name: name.into(), columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub config: Value,
    pub tables: Vec<Table>,
    pub summary: Vec<String>,
}

impl Report {
    pub fn new(config: Value) -> Self {
        Report { config, tables: Vec::new(), summary: Vec::new() }
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# config: {}", self.config).unwrap();
        for (i, t) in self.tables.iter().enumerate() {
            if i > 0 {
                writeln!(out, "# section: {}", t.name).unwrap();
            }
            writeln!(out, "{}", t.columns.join(",")).unwrap();
            for row in &t.rows {
                let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                writeln!(out, "{}", cells.join(",")).unwrap();
            }
        }
        for line in &self.summary {
            writeln!(out, "# {line}").unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let tables: Vec<Value> = self
            .tables
            .iter()
            .map(|t| {
                let rows: Vec<Value> = t
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> =
                            t.columns.iter().zip(row).map(|(c, v)| (c.to_string(), v.json())).collect();
                        Value::Object(obj)
                    })
                    .collect();
                json!({ "name": t.name, "columns": t.columns, "rows": rows })
            })
            .collect();
        let doc = json!({ "config": self.config, "tables": tables, "summary": self.summary });
        let mut s = serde_json::to_string_pretty(&doc).expect("values serialize");
        s.push('\n');
        s
    }
}
