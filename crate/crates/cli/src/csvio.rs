//! Matrices as CSV: a header of column labels, then one labelled row per
//! matrix row, entries as exact rationals.

use operad_core::algebra::{Rational, SparseMatrix};

use crate::error::{CliError, Result};

pub fn write_matrix(m: &SparseMatrix) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![String::new()];
    header.extend(m.col_labels().iter().cloned());
    w.write_record(&header)?;
    for r in 0..m.rows() {
        let mut rec = vec![m.row_labels()[r].clone()];
        rec.extend((0..m.cols()).map(|c| m.get(r, c).to_string()));
        w.write_record(&rec)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn read_matrix(text: &str) -> Result<SparseMatrix> {
    let mut rd = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let cols: Vec<String> = rd.headers()?.iter().skip(1).map(str::to_string).collect();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (r, rec) in rd.records().enumerate() {
        let rec = rec?;
        rows.push(rec.get(0).unwrap_or("").to_string());
        for (c, field) in rec.iter().skip(1).enumerate() {
            let x: Rational = field
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("row {}: `{field}` is not a rational", r + 1)))?;
            entries.push((r, c, x));
        }
    }
    let mut m = SparseMatrix::new(rows, cols);
    for (r, c, x) in entries {
        m.set(r, c, x);
    }
    Ok(m)
}
