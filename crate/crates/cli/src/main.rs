mod args;
mod commands;
mod error;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{run_command, Settings};
use error::{CliError, CliResult};

fn run(cli: &Cli) -> CliResult<()> {
    let settings = Settings::from_opts(&cli.global)?;
    let report = run_command(&cli.command, &settings)?;
    let rendered = report.render(cli.global.format);
    let destination = match &cli.command {
        Command::Curve {
            out: Some(path), ..
        } => Some(path),
        _ => cli.global.output.as_ref(),
    };
    match destination {
        Some(path) => std::fs::write(path, rendered)?,
        None => std::io::stdout().lock().write_all(rendered.as_bytes())?,
    }
    if cli.global.strict && report.unresolved > 0 {
        return Err(CliError::Unresolved(report.unresolved));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("betatau: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
