//! The five experiments. Each `run` function returns a typed report; the
//! `outcome` methods turn a report into files and an overall verdict.

pub mod bounds;
pub mod converge;
pub mod counterexample;
pub mod render;
pub mod sweep;

use anyhow::Result;
use bendlab_core::bending::BendingContext;
use bendlab_core::laminations::FiniteLamination;

use crate::config::{basepoint, GroupConfig, LaminationSource, Pair};

/// Files produced by a command, and whether all of its assertions held.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    /// Written to the `--out` path.
    pub primary: String,
    /// `(suffix, contents)`: written next to `--out`, replacing its extension.
    pub sidecars: Vec<(String, String)>,
    pub pass: bool,
    /// Human-readable lines for standard error.
    pub notes: Vec<String>,
}

pub(crate) fn context(group: &GroupConfig, x: Option<Pair>) -> Result<BendingContext> {
    Ok(BendingContext::fuchsian(group.build()?, basepoint(x)?)?)
}

/// Leaves near the context's segments and basepoint.
pub(crate) fn instantiate(ctx: &BendingContext, source: &LaminationSource) -> Result<FiniteLamination> {
    match source {
        LaminationSource::Orbit(spec) => Ok(ctx.instantiate(spec)?),
        LaminationSource::Finite(lam) => Ok(lam.clone()),
    }
}
