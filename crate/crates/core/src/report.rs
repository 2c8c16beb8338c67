//! Tabular reports rendered as JSON, CSV or Markdown.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Md,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    pub meta: Meta,
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

impl Report {
    pub fn new(title: impl Into<String>, columns: &[&str], seed: u64) -> Self {
        Report {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            meta: Meta { version: env!("CARGO_PKG_VERSION").to_string(), seed },
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        self.rows.push(row);
    }

    /// Keys come out sorted because `serde_json::Map` is ordered.
    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(self).expect("report is plain data")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(cell)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("## {}\n\n", self.title);
        let head: Vec<String> = self.columns.iter().map(|c| c.replace('|', "\\|")).collect();
        let _ = writeln!(s, "| {} |", head.join(" | "));
        let _ = writeln!(s, "|{}", "---|".repeat(self.columns.len()));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| cell(v).replace('|', "\\|")).collect();
            let _ = writeln!(s, "| {} |", cells.join(" | "));
        }
        s
    }
}

/// Renders one or more reports; several JSON reports become an array.
pub fn render(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => {
            let v = if reports.len() == 1 {
                reports[0].to_json_value()
            } else {
                Value::Array(reports.iter().map(Report::to_json_value).collect())
            };
            let mut s = serde_json::to_string_pretty(&v).expect("json value");
            s.push('\n');
            s
        }
        Format::Csv => reports.iter().map(Report::to_csv).collect::<Vec<_>>().join("\n"),
        Format::Md => reports.iter().map(Report::to_markdown).collect::<Vec<_>>().join("\n"),
    }
}
