//! Matrix documents: `{"rows": n, "cols": m, "entries": [[token, ...], ...]}`
//! with every entry a scalar token in canonical or accepted text form.

use ginv_core::scalar::{scalar_format, scalar_parse};
use ginv_core::{GaussianRational, Matrix};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// The wire form of a matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixPayload {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixPayload {
    pub fn from_matrix(m: &Matrix) -> Self {
        MatrixPayload {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.row_iter().map(|row| row.iter().map(scalar_format).collect()).collect(),
        }
    }

    /// Checks the declared shape against the grid, then parses every token.
    pub fn to_matrix(&self) -> Result<Matrix, CliError> {
        if self.rows == 0 || self.cols == 0 {
            return Err(CliError::Dimension(format!(
                "declared shape {}x{} is empty",
                self.rows, self.cols
            )));
        }
        if self.entries.len() != self.rows {
            return Err(CliError::Dimension(format!(
                "declared {} rows, grid has {}",
                self.rows,
                self.entries.len()
            )));
        }
        if let Some((i, row)) = self.entries.iter().enumerate().find(|(_, r)| r.len() != self.cols) {
            return Err(CliError::Dimension(format!(
                "row {} has {} entries, declared {} columns",
                i + 1,
                row.len(),
                self.cols
            )));
        }

        let mut data: Vec<GaussianRational> = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, token) in row.iter().enumerate() {
                let z = scalar_parse(token).map_err(|e| CliError::Parse {
                    location: format!("row {}, column {}", i + 1, j + 1),
                    message: format!("token {token:?}: {e}"),
                })?;
                data.push(z);
            }
        }
        Matrix::new(self.rows, self.cols, data).map_err(|e| CliError::Dimension(e.to_string()))
    }
}

/// Parses a matrix document.
pub fn parse_document(doc: &str) -> Result<Matrix, CliError> {
    let payload: MatrixPayload = serde_json::from_str(doc).map_err(|e| CliError::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    payload.to_matrix()
}

/// Canonical text of a matrix document, newline-terminated.
pub fn emit_matrix(m: &Matrix) -> String {
    let mut text = serde_json::to_string_pretty(&MatrixPayload::from_matrix(m)).expect("plain data serializes");
    text.push('\n');
    text
}
