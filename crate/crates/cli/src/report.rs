//! Report documents.
//!
//! Keys are emitted in declaration order:
//! `command, kind, ok, result, unique, index, checks, reason`, followed by
//! `parts` for `decompose` only.

use serde::{Deserialize, Serialize};

use crate::document::MatrixPayload;
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckEntry {
    pub name: String,
    pub holds: bool,
}

/// The three matrices of a core/nilpotent split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parts {
    pub core: MatrixPayload,
    pub nil: MatrixPayload,
    pub projector: MatrixPayload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub command: String,
    pub kind: Option<String>,
    pub ok: bool,
    pub result: Option<MatrixPayload>,
    pub unique: Option<bool>,
    pub index: Option<usize>,
    pub checks: Vec<CheckEntry>,
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Parts>,
}

impl ReportDocument {
    /// A report for an operation that produced no value.
    pub fn failure(command: &str, kind: Option<&str>, reason: String) -> Self {
        ReportDocument {
            command: command.to_string(),
            kind: kind.map(str::to_string),
            ok: false,
            result: None,
            unique: None,
            index: None,
            checks: Vec::new(),
            reason: Some(reason),
            parts: None,
        }
    }
}

/// Canonical text of a report, newline-terminated.
pub fn emit_document(report: &ReportDocument) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn parse_report(text: &str) -> Result<ReportDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })
}
