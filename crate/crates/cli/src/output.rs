//! Rendering of result tables as aligned text, CSV, or JSON lines.

use clap::ValueEnum;
use gonal_slope_core::ratcalc::Rat;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Jsonl,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Exact(Rat),
    /// Decimal approximation; never used for comparisons.
    Approx(f64),
    Int(i64),
    Bool(bool),
    Missing,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    pub fn approx(r: &Rat) -> Cell {
        Cell::Approx(r.to_f64())
    }

    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Exact(r) => r.to_string(),
            Cell::Approx(x) => format!("{x:.6}"),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Exact(r) => Value::String(r.to_string()),
            Cell::Approx(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Int(n) => Value::from(*n),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Missing => Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    /// Record type, emitted as the `record` field in JSON lines.
    pub name: &'static str,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &'static str, headers: &[&'static str]) -> Self {
        Table { name, headers: headers.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    /// Key/value table with columns `quantity, value, approx`.
    pub fn quantities(name: &'static str) -> Self {
        Table::new(name, &["quantity", "value", "approx"])
    }

    pub fn exact(&mut self, quantity: &str, r: &Rat) {
        self.push(vec![Cell::text(quantity), Cell::Exact(r.clone()), Cell::approx(r)]);
    }

    pub fn info(&mut self, quantity: &str, value: Cell) {
        self.push(vec![Cell::text(quantity), value, Cell::Missing]);
    }

    fn render_text(&self, out: &mut String) {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| match c {
                        Cell::Missing => "-".to_string(),
                        other => other.render(),
                    })
                    .collect()
            })
            .collect();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut line = |fields: Vec<&str>| {
            let mut s = String::new();
            for (i, (f, w)) in fields.iter().zip(&widths).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                s.push_str(f);
                s.push_str(&" ".repeat(w - f.chars().count()));
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(self.headers.clone());
        for row in &cells {
            line(row.iter().map(String::as_str).collect());
        }
    }

    fn render_csv(&self, out: &mut String) {
        out.push_str(&self.headers.join(","));
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(|c| c.render().replace(',', ";")).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
    }

    fn render_jsonl(&self, out: &mut String) {
        for row in &self.rows {
            let mut obj = Map::new();
            obj.insert("record".into(), Value::String(self.name.into()));
            for (h, c) in self.headers.iter().zip(row) {
                obj.insert((*h).into(), c.json());
            }
            out.push_str(&Value::Object(obj).to_string());
            out.push('\n');
        }
    }
}

/// One or more tables; CSV output carries only the primary one.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub sections: Vec<Table>,
    pub primary: usize,
}

impl Report {
    pub fn single(t: Table) -> Self {
        Report { sections: vec![t], primary: 0 }
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Table => {
                for (i, t) in self.sections.iter().enumerate() {
                    if i > 0 {
                        out.push('\n');
                    }
                    t.render_text(&mut out);
                }
            }
            Format::Csv => self.sections[self.primary].render_csv(&mut out),
            Format::Jsonl => self.sections.iter().for_each(|t| t.render_jsonl(&mut out)),
        }
        out
    }
}
