use serde_json::Value;

use crate::cli::OutputFormat;

/// Rows for the CSV and table formats.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows
            .push(row.into_iter().map(|s| s.to_string()).collect());
    }
}

/// A command result in every output format.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: Value,
    pub table: Table,
    /// JSON appended after the CSV rows.
    pub csv_trailer: Option<Value>,
}

impl Output {
    pub fn new(json: Value, table: Table) -> Self {
        Output {
            json,
            table,
            csv_trailer: None,
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => pretty(&self.json),
            OutputFormat::Csv => {
                let mut out = csv_string(&self.table);
                if let Some(extra) = &self.csv_trailer {
                    out.push('\n');
                    out.push_str(&pretty(extra));
                }
                out
            }
            OutputFormat::Table => aligned(&self.table),
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn csv_string(table: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.headers).expect("in-memory write");
    for row in &table.rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn aligned(table: &Table) -> String {
    let cols = table.headers.len();
    let mut widths: Vec<usize> = table.headers.iter().map(|h| h.chars().count()).collect();
    for row in &table.rows {
        for (k, cell) in row.iter().enumerate().take(cols) {
            widths[k] = widths[k].max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(k, c)| format!("{c:<w$}", w = widths.get(k).copied().unwrap_or(0)))
            .collect();
        let mut s = padded.join("  ").trim_end().to_string();
        s.push('\n');
        s
    };
    let mut out = line(&table.headers);
    for row in &table.rows {
        out.push_str(&line(row));
    }
    out
}
