//! Spectra, ansatz coefficients, wavefunction samples, and closed-form vs
//! oracle verification for 2D radial bound states, printed as JSON or CSV.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parameter error,
//! 3 numerical convergence or accuracy failure. Every error path prints one
//! machine-parsable line `error[<code>]: <message>` to stderr.

mod commands;
mod config;
mod error;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use commands::Outcome;
use config::{Cli, Command, RunConfig, SamplingArgs};
use error::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => return report_clap_error(&err),
    };
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error[{}]: {err}", err.code());
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let format;
    let outcome: Outcome;
    match &cli.command {
        Command::Spectrum(common) => {
            let cfg = RunConfig::resolve(common, &SamplingArgs::default())?;
            format = cfg.output;
            outcome = commands::spectrum(&cfg)?;
        }
        Command::Coefficients(common) => {
            let cfg = RunConfig::resolve(common, &SamplingArgs::default())?;
            format = cfg.output;
            outcome = commands::coefficients(&cfg)?;
        }
        Command::Wavefunction(args) => {
            let cfg = RunConfig::resolve(&args.common, &args.sampling)?;
            format = cfg.output;
            outcome = commands::wavefunction(&cfg)?;
        }
        Command::Verify(common) => {
            let cfg = RunConfig::resolve(common, &SamplingArgs::default())?;
            format = cfg.output;
            outcome = commands::verify(&cfg)?;
        }
    }

    print!("{}", outcome.document.render(format));
    if outcome.failed_rows > 0 {
        eprintln!(
            "error[verification]: {} of {} rows failed",
            outcome.failed_rows, outcome.total_rows
        );
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

/// Keep stderr machine-parsable even for argument errors: one line,
/// `error[usage]: …`. Help and version requests are not errors.
fn report_clap_error(err: &clap::Error) -> ExitCode {
    match err.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
            print!("{err}");
            ExitCode::SUCCESS
        }
        _ => {
            let rendered = err.render().to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            eprintln!("error[usage]: {first}");
            ExitCode::from(error::EXIT_USAGE)
        }
    }
}
