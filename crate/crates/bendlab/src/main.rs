use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Result;
use bendlab::commands::{bounds, converge, counterexample, render, sweep};
use bendlab::config::{load, BoundsConfig};
use bendlab::{write_outcome, Outcome};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bendlab", version, about = "Bending deformations of surface group representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Io {
    /// JSON experiment config.
    #[arg(long)]
    config: PathBuf,
    /// Output file; sidecars are written next to it.
    #[arg(long)]
    out: PathBuf,
    /// Overrides the seed in the config, where one is used.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Weakly null laminations with unit-translation cocycles.
    Counterexample(Io),
    /// Weight-scaled and added-curve sequences.
    Converge(Io),
    /// Sampled matrix estimates.
    Bounds(Io),
    /// Partition-scheme grid over m and n.
    ApproxSweep(Io),
    /// Disc-model SVG figure.
    Render(Io),
}

fn execute(cmd: &Command) -> Result<(Outcome, &Path)> {
    Ok(match cmd {
        Command::Counterexample(io) => {
            let rows = counterexample::run(&load(&io.config)?)?;
            (counterexample::outcome(&rows)?, &io.out)
        }
        Command::Converge(io) => (converge::outcome(&converge::run(&load(&io.config)?)?)?, &io.out),
        Command::Bounds(io) => {
            let mut cfg: BoundsConfig = load(&io.config)?;
            if let Some(s) = io.seed {
                cfg.seed = s;
            }
            (bounds::outcome(&bounds::run(&cfg)?)?, &io.out)
        }
        Command::ApproxSweep(io) => (sweep::outcome(&sweep::run(&load(&io.config)?)?)?, &io.out),
        Command::Render(io) => (render::outcome(&load(&io.config)?)?, &io.out),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command).and_then(|(outcome, out)| write_outcome(out, &outcome).map(|_| outcome)) {
        Ok(outcome) => {
            for n in &outcome.notes {
                eprintln!("{n}");
            }
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                eprintln!("some assertions failed; see the pass column");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
