use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::render::Figure;

#[derive(Debug, Parser)]
#[command(
    name = "cfdyn",
    version,
    about = "Diamond complex continued fractions and their natural extension"
)]
pub struct Cli {
    /// Output format; `verify` defaults to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Add wall-clock timings to verification reports.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Diamond,
    Hurwitz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Partition,
    Bijectivity,
    Trapping,
    Psi,
    Identities,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// A complex literal such as `3/2-i` (exact) or `1.25+0.5i` (float).
    #[arg(allow_hyphen_values = true)]
    pub z: String,
    #[arg(long, value_enum, default_value = "diamond")]
    pub algorithm: Algorithm,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    pub steps: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Continued-fraction digits, remainders, convergents and residuals.
    Expand(ExpandArgs),
    /// Convergents p_n/q_n and their determinants.
    Convergents(ExpandArgs),
    /// The partition cell g(W_k) containing a point.
    Classify {
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Iterates the natural extension from (z, w); w must not be rational.
    Orbit {
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(long, default_value_t = 500)]
        steps: usize,
    },
    /// Runs a verification suite and prints a JSON report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// Writes one of the figures as SVG.
    Render {
        #[arg(value_enum)]
        figure: Figure,
    },
}
