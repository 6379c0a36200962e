use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded but not counted as a failure: an expected counterexample, or
    /// a scan result outside any proven range.
    Finding,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

/// One grid point of a verification suite.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub witness: Value,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(check_id: &str) -> Self {
        VerificationReport {
            check_id: check_id.to_string(),
            parameters: BTreeMap::new(),
            status: Status::Pass,
            witness: Value::Null,
            elapsed_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn witness(mut self, witness: impl Into<Value>) -> Self {
        self.witness = witness.into();
        self
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Renders reports in grid order; the output depends only on the reports.
pub fn render(reports: &[VerificationReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            for r in reports {
                out.push_str(&serde_json::to_string(r).expect("report serializes"));
                out.push('\n');
            }
        }
        Format::Text => {
            let rows: Vec<[String; 4]> = reports
                .iter()
                .map(|r| {
                    let params = r
                        .parameters
                        .iter()
                        .map(|(k, v)| format!("{k}={}", scalar(v)))
                        .collect::<Vec<_>>()
                        .join(" ");
                    [
                        r.check_id.clone(),
                        r.status.as_str().to_string(),
                        params,
                        r.witness.to_string(),
                    ]
                })
                .collect();
            let mut widths = [0usize; 3];
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row.iter()) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            for row in rows {
                let _ = writeln!(
                    out,
                    "{:<w0$}  {:<w1$}  {:<w2$}  {}",
                    row[0],
                    row[1],
                    row[2],
                    row[3],
                    w0 = widths[0],
                    w1 = widths[1],
                    w2 = widths[2]
                );
            }
        }
        Format::Csv => {
            let keys: BTreeSet<&String> =
                reports.iter().flat_map(|r| r.parameters.keys()).collect();
            let mut header = vec!["check_id".to_string(), "status".to_string()];
            header.extend(keys.iter().map(|k| k.to_string()));
            header.push("witness".into());
            header.push("elapsed_ms".into());
            out.push_str(&header.join(","));
            out.push('\n');
            for r in reports {
                let mut row = vec![r.check_id.clone(), r.status.as_str().to_string()];
                for k in &keys {
                    row.push(csv_field(
                        &r.parameters.get(*k).map(scalar).unwrap_or_default(),
                    ));
                }
                row.push(csv_field(&r.witness.to_string()));
                row.push(r.elapsed_ms.to_string());
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
    }
    out
}
