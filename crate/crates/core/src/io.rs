//! Numeric CSV input and output.
//!
//! All emitted files use shortest-round-trip decimal formatting (Rust's
//! default float `Display`), so a written value parses back bit-identical
//! and traces diff cleanly across platforms.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::model::RawDataset;

/// How to pick the response column out of a CSV file.
#[derive(Debug, Clone)]
pub enum ResponseSelector {
    Name(String),
    Index(usize),
}

/// A dataset read from disk, with the provenance of its columns.
#[derive(Debug, Clone)]
pub struct LoadedCsv {
    pub dataset: RawDataset,
    pub feature_names: Vec<String>,
    pub response_name: String,
}

/// Read a numeric CSV with a header row: every field must parse as a finite
/// float. Returns (header, rows).
pub fn read_numeric_csv(path: &Path) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| csv_error(e, 1, 0))?;
    let header: Vec<String> = reader
        .headers()
        .map_err(|e| csv_error(e, 1, 0))?
        .iter()
        .map(|s| s.to_string())
        .collect();

    let mut rows = Vec::new();
    for (idx, record) in reader.records().enumerate() {
        let line = idx + 2; // 1-based, after the header
        let record = record.map_err(|e| csv_error(e, line, 0))?;
        if record.len() != header.len() {
            return Err(Error::CsvParse {
                line,
                column: record.len(),
                message: format!("expected {} fields, found {}", header.len(), record.len()),
            });
        }
        let mut row = Vec::with_capacity(record.len());
        for (col, field) in record.iter().enumerate() {
            let value: f64 = field.parse().map_err(|_| Error::CsvParse {
                line,
                column: col + 1,
                message: format!("{field:?} is not a number"),
            })?;
            if !value.is_finite() {
                return Err(Error::CsvParse {
                    line,
                    column: col + 1,
                    message: format!("{field:?} is not finite"),
                });
            }
            row.push(value);
        }
        rows.push(row);
    }
    Ok((header, rows))
}

/// Load a dataset, splitting off the response column selected by name or
/// zero-based index.
pub fn load_csv(path: &Path, response: &ResponseSelector) -> Result<LoadedCsv> {
    let (header, rows) = read_numeric_csv(path)?;
    let resp_idx = match response {
        ResponseSelector::Name(name) => header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::MissingResponseColumn { name: name.clone() })?,
        ResponseSelector::Index(i) => {
            if *i >= header.len() {
                return Err(Error::MissingResponseColumn {
                    name: format!("#{i}"),
                });
            }
            *i
        }
    };

    let n = rows.len();
    let p = header.len().saturating_sub(1);
    if n == 0 || p == 0 {
        return Err(Error::invalid(
            "CSV must contain at least one data row and one covariate column",
        ));
    }

    let mut x = Array2::zeros((n, p));
    let mut y = Array1::zeros(n);
    for (i, row) in rows.iter().enumerate() {
        let mut jj = 0;
        for (j, &v) in row.iter().enumerate() {
            if j == resp_idx {
                y[i] = v;
            } else {
                x[[i, jj]] = v;
                jj += 1;
            }
        }
    }

    let feature_names = header
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != resp_idx)
        .map(|(_, h)| h.clone())
        .collect();

    Ok(LoadedCsv {
        dataset: RawDataset::new(x, y)?,
        feature_names,
        response_name: header[resp_idx].clone(),
    })
}

/// Write a numeric CSV with shortest-round-trip float formatting.
pub fn write_numeric_csv<P: AsRef<Path>>(
    path: P,
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<f64>>,
) -> Result<()> {
    let file = File::create(path.as_ref())?;
    let mut w = BufWriter::new(file);
    writeln!(w, "{}", header.join(","))?;
    for row in rows {
        let mut first = true;
        for v in row {
            if !first {
                write!(w, ",")?;
            }
            write!(w, "{v}")?;
            first = false;
        }
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_error(err: csv::Error, line: usize, column: usize) -> Error {
    Error::CsvParse {
        line,
        column,
        message: err.to_string(),
    }
}
