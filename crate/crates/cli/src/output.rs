//! Destinations and encodings for command results.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::commands::CliError;
use crate::Format;

/// Buffered writer to a file or standard output.
pub fn sink(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_csv<R: Serialize>(out: Box<dyn Write>, rows: &[R]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes flat `rows` as CSV, a JSON array, or one text line per row.
pub fn emit_rows<R: Serialize>(
    format: Format,
    path: Option<&Path>,
    rows: &[R],
    text: impl Fn(&R) -> String,
) -> Result<(), CliError> {
    let mut out = sink(path)?;
    match format {
        Format::Csv => return write_csv(out, rows),
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
        }
        Format::Text => {
            for r in rows {
                writeln!(out, "{}", text(r))?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// Writes a single result: `text` for text, `full` for JSON, `row` for CSV.
pub fn emit_one<J: Serialize, R: Serialize>(format: Format, text: &str, full: &J, row: &R) -> Result<(), CliError> {
    let mut out = sink(None)?;
    match format {
        Format::Csv => return write_csv(out, std::slice::from_ref(row)),
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, full)?;
            writeln!(out)?;
        }
        Format::Text => writeln!(out, "{text}")?,
    }
    out.flush()?;
    Ok(())
}

/// Joins values with `;` for single CSV cells.
pub fn join<T: ToString>(values: impl IntoIterator<Item = T>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(";")
}
