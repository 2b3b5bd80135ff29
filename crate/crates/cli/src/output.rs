//! Rendering of command results as an aligned table, CSV, or JSON.

use std::fmt::Display;
use std::process::ExitCode;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "colperm-cli/1";

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

pub struct Report {
    command: &'static str,
    columns: Vec<&'static str>,
    params: Map<String, Value>,
    rows: Vec<Vec<String>>,
    headline: Option<String>,
    failure: Option<(u8, String)>,
}

#[derive(Serialize)]
struct Document<'a> {
    schema: &'static str,
    command: &'static str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    message: Option<&'a str>,
    params: &'a Map<String, Value>,
    columns: &'a [&'static str],
    rows: Vec<Map<String, Value>>,
}

impl Report {
    pub fn new(command: &'static str, columns: &[&'static str]) -> Self {
        Report {
            command,
            columns: columns.to_vec(),
            params: Map::new(),
            rows: Vec::new(),
            headline: None,
            failure: None,
        }
    }

    /// Scalar parameters are recorded as strings so big values survive.
    pub fn param(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.params.insert(key.to_string(), Value::String(value.to_string()));
        self
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    /// Replaces the table rendering with a short human summary.
    pub fn headline(&mut self, text: String) {
        self.headline = Some(text);
    }

    pub fn fail(&mut self, message: String) {
        self.failure.get_or_insert((1, message));
    }

    pub fn fail_with_budget(&mut self, message: String) {
        self.failure.get_or_insert((3, message));
    }

    pub fn exit_code(&self) -> ExitCode {
        match &self.failure {
            None => ExitCode::SUCCESS,
            Some((code, msg)) => {
                eprintln!("{}: {msg}", if *code == 3 { "budget" } else { "check failed" });
                ExitCode::from(*code)
            }
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table(),
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn table(&self) -> String {
        if let Some(h) = &self.headline {
            return format!("{h}\n");
        }
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &mut dyn Iterator<Item = &str>| -> String {
            let parts: Vec<String> = cells.zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            parts.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&mut self.columns.iter().copied());
        for row in &self.rows {
            out += &line(&mut row.iter().map(String::as_str));
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    fn json(&self) -> String {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                self.columns
                    .iter()
                    .zip(r)
                    .map(|(c, v)| (c.to_string(), Value::String(v.clone())))
                    .collect()
            })
            .collect();
        let doc = Document {
            schema: SCHEMA,
            command: self.command,
            status: if self.failure.is_some() { "fail" } else { "ok" },
            message: self.failure.as_ref().map(|(_, m)| m.as_str()),
            params: &self.params,
            columns: &self.columns,
            rows,
        };
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    }
}
