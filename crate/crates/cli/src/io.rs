//! Matrix files.
//!
//! JSON: `{"n": rows, "m": cols, "entries": [["p/q", ...], ...]}`.
//! CSV: one matrix row per line, comma-separated rationals, no header.

use std::path::Path;

use compoundlab::{RMatrix, Rational};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixFormat {
    Json,
    Csv,
}

impl MatrixFormat {
    /// From the file extension, falling back to sniffing the content.
    pub fn detect(path: &Path, text: &str) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => MatrixFormat::Json,
            Some(e) if e.eq_ignore_ascii_case("csv") => MatrixFormat::Csv,
            _ if text.trim_start().starts_with('{') => MatrixFormat::Json,
            _ => MatrixFormat::Csv,
        }
    }
}

/// A parsed matrix together with the format it came in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFile {
    pub format: MatrixFormat,
    pub matrix: RMatrix,
}

impl MatrixFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        let format = MatrixFormat::detect(path, &text);
        let matrix = parse(&text, format).map_err(|e| match e {
            CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })?;
        Ok(MatrixFile { format, matrix })
    }

    pub fn render(&self) -> String {
        render(&self.matrix, self.format)
    }
}

pub fn parse(text: &str, format: MatrixFormat) -> Result<RMatrix, CliError> {
    match format {
        MatrixFormat::Json => {
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
        }
        MatrixFormat::Csv => parse_csv(text),
    }
}

fn parse_csv(text: &str) -> Result<RMatrix, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Parse(e.to_string()))?;
        let row = record
            .iter()
            .map(|field| {
                field
                    .parse::<Rational>()
                    .map_err(|e| CliError::Parse(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Parse("empty matrix".into()));
    }
    RMatrix::from_rows(rows).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn render(a: &RMatrix, format: MatrixFormat) -> String {
    let rows: Vec<Vec<String>> = a
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    match format {
        MatrixFormat::Csv => rows.iter().map(|r| r.join(",") + "\n").collect(),
        MatrixFormat::Json => {
            let body: Vec<String> = rows
                .iter()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(|c| format!("\"{c}\"")).collect();
                    format!("    [{}]", cells.join(", "))
                })
                .collect();
            format!(
                "{{\n  \"n\": {},\n  \"m\": {},\n  \"entries\": [\n{}\n  ]\n}}\n",
                a.rows(),
                a.cols(),
                body.join(",\n")
            )
        }
    }
}
