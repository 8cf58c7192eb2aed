mod args;
mod commands;
mod error;
mod output;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::error::CliError;

fn run(cli: Cli) -> Result<u8, CliError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match cli.command {
        Command::Count { subject } => commands::count(subject, &mut out).map(|_| 0)?,
        Command::Enumerate(args) => commands::enumerate(args, &mut out).map(|_| 0)?,
        Command::Prufer { direction } => {
            commands::prufer(direction, io::stdin().lock(), &mut out).map(|_| 0)?
        }
        Command::Sample(args) => commands::sample(args, &mut out).map(|_| 0)?,
        Command::Verify(args) => commands::verify(args, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.is_broken_pipe() => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
