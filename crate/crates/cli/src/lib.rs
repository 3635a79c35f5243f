//! The `cfdyn` command-line front end.
//!
//! Exit status: 0 success, 1 a failed check (or a failed computation),
//! 2 unparseable input or bad arguments, 3 inconclusive checks only,
//! 4 I/O failure, 5 an orbit requested with a rational `w`.

pub mod args;
pub mod commands;
pub mod config;
pub mod render;
pub mod svg;

use std::path::Path;

use thiserror::Error;

pub use args::Cli;
pub use commands::{exit_code, run, verify_report, Output};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse complex literal '{input}': offending token '{token}'")]
    Parse { input: String, token: String },
    #[error("{0}")]
    Domain(String),
    #[error("config: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(
        "w = {0} is rational: such orbits are finite and excluded; pass a decimal literal for an irrational stand-in"
    )]
    RationalW(String),
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Domain(_) | CliError::Config(_) => 2,
            CliError::Io { .. } => 4,
            CliError::RationalW(_) => 5,
            CliError::Compute(_) => 1,
        }
    }
}

/// Writes `text` to `out`, or to stdout.
pub fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io {
            path: p.display().to_string(),
            source: e,
        }),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io {
                    path: "stdout".into(),
                    source: e,
                })
        }
    }
}
