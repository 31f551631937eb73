//! Output plumbing: format selection, CSV quoting, and the stdout/file sink.

use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde::Serialize;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// Quote a CSV cell. Cells hold canonical polynomial or rational strings,
/// which never contain quotes, but escape defensively anyway.
pub fn csv_quote(cell: &str) -> String {
    format!("\"{}\"", cell.replace('"', "\"\""))
}

/// Compact JSON plus a trailing newline. serde_json's map keys are ordered,
/// so identical inputs give byte-identical output.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value).context("serializing output")?;
    s.push('\n');
    Ok(s)
}

/// Write to the file named by --out, or to standard output.
pub fn write_output(path: &Option<PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(path) => {
            std::fs::write(path, content).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle
                .write_all(content.as_bytes())
                .context("writing to stdout")
        }
    }
}
