use std::process::ExitCode;

use cfdyn_cli::{emit, exit_code, run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        emit(cli.out.as_deref(), &out.text)?;
        Ok(exit_code(out.status))
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("cfdyn: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
