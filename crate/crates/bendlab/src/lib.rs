//! Experiment driver for bending deformations: JSON configs in, CSV tables,
//! JSON summaries and SVG figures out.

pub mod commands;
pub mod config;
pub mod fit;
pub mod search;
pub mod svg;
pub mod table;

use std::path::{Path, PathBuf};

use anyhow::Result;

pub use commands::Outcome;

/// Path of a sidecar file: `out.csv` with suffix `summary.json` becomes
/// `out.summary.json`.
pub fn sidecar_path(out: &Path, suffix: &str) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}.{suffix}"))
}

/// Writes the primary artifact and its sidecars atomically.
pub fn write_outcome(out: &Path, outcome: &Outcome) -> Result<()> {
    table::write_atomic(out, outcome.primary.as_bytes())?;
    for (suffix, contents) in &outcome.sidecars {
        table::write_atomic(&sidecar_path(out, suffix), contents.as_bytes())?;
    }
    Ok(())
}
