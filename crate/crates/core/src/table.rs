//! Tabular output: CSV with a header row, or JSON records under a `meta`
//! header.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

/// Numeric table with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

/// Context written alongside JSON records.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Meta {
    pub command: String,
    pub model: Value,
    pub tolerances: Value,
    pub tool_version: &'static str,
}

/// 17 significant digits: enough for `parse(format(x)) == x` on every f64.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| format_f64(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::domain("from_csv", "missing header row"))?;
        let mut table = Table::new(header.split(',').map(str::trim));
        for (i, line) in lines.enumerate() {
            let row = line
                .split(',')
                .map(|c| c.trim().parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::domain("from_csv", format!("row {}: {e}", i + 1)))?;
            if row.len() != table.columns.len() {
                return Err(Error::domain(
                    "from_csv",
                    format!("row {} has {} cells, header has {}", i + 1, row.len(), table.columns.len()),
                ));
            }
            table.rows.push(row);
        }
        Ok(table)
    }

    /// Two whitespace-separated columns, for external plotting tools.
    pub fn to_gnuplot(&self, x: &str, y: &str) -> Option<String> {
        let xs = self.column(x)?;
        let ys = self.column(y)?;
        let mut out = format!("# {x} {y}\n");
        for (a, b) in xs.iter().zip(ys) {
            out.push_str(&format!("{} {}\n", format_f64(*a), format_f64(b)));
        }
        Some(out)
    }

    pub fn to_json(&self, meta: &Meta) -> String {
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.clone(), json!(v)))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        serde_json::to_string_pretty(&json!({ "meta": meta, "records": records }))
            .expect("tables serialise")
    }
}
