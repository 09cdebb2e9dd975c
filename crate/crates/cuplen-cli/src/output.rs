//! Output envelope and renderers shared by every subcommand.

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// One finished command: structured rows plus pre-rendered text forms.
/// `clean` decides the exit status.
pub struct CommandOutput {
    pub command: &'static str,
    pub params: Value,
    pub rows: Value,
    pub failures: Value,
    pub md: String,
    pub csv: String,
    pub clean: bool,
}

impl CommandOutput {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Md => self.md.clone(),
            Format::Csv => self.csv.clone(),
            Format::Json => {
                let envelope = json!({
                    "meta": {
                        "command": self.command,
                        "version": env!("CARGO_PKG_VERSION"),
                        "params": self.params,
                    },
                    "rows": self.rows,
                    "failures": self.failures,
                });
                let mut s = serde_json::to_string_pretty(&envelope).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

pub fn csv_string<T: Serialize>(rows: &[T]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&format!("| {} |\n", header.join(" | ")));
    out.push_str(&format!(
        "|{}|\n",
        header.iter().map(|_| "---").collect::<Vec<_>>().join("|")
    ));
    for row in rows {
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    out
}

pub fn rows_value<T: Serialize>(rows: &[T]) -> Value {
    serde_json::to_value(rows).expect("serializable")
}

pub fn opt_u64(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}
