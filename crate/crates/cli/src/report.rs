use serde_json::{json, Value};

use crate::CliError;

/// Bumped whenever a column is added, removed, or reinterpreted.
pub const SCHEMA_VERSION: u32 = 1;

/// Rows of one mode. Every value is a string; rationals print as `p/q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub mode: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(mode: &'static str, columns: &[&'static str]) -> Self {
        Report { mode, columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| *c == name)
    }

    /// Rows whose `pass` column is `false`.
    pub fn failures(&self) -> usize {
        match self.column("pass") {
            Some(k) => self.rows.iter().filter(|r| r[k] == "false").count(),
            None => 0,
        }
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).map_err(|e| CliError::Serialize(e.to_string()))?;
        for r in &self.rows {
            w.write_record(r).map_err(|e| CliError::Serialize(e.to_string()))?;
        }
        let body = w.into_inner().map_err(|e| CliError::Serialize(e.to_string()))?;
        let body = String::from_utf8(body).map_err(|e| CliError::Serialize(e.to_string()))?;
        Ok(format!("# fewcurve {} report, schema v{SCHEMA_VERSION}\n{body}", self.mode))
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let rows: Vec<Value> = self.rows.iter().map(|r| json!(r)).collect();
        let v = json!({
            "schema": SCHEMA_VERSION,
            "mode": self.mode,
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&v).map_err(|e| CliError::Serialize(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }
}
