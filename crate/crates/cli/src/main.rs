mod cli;
mod commands;
mod config;
mod error;
mod json;
mod render;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use cli::{Cli, Command, ParamsAction, VerifyAction};
use error::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => {
            let message = e.to_string();
            let first = message
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ");
            return fail(&CliError::InvalidArguments(first.to_string()));
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", e.to_json_line());
    ExitCode::from(e.exit_code())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    if cli.global.jobs > 0 {
        // only fails if a pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.global.jobs)
            .build_global();
    }
    let params = config::load(&cli.global)?;
    let mut failures = 0;
    let output = match &cli.command {
        Command::Params {
            action: ParamsAction::Validate,
        } => commands::params_validate(&params),
        Command::Enum { target } => commands::enumerate(&params, *target),
        Command::Poset { order } => commands::poset(&params, *order),
        Command::Orbits => commands::orbits(&params),
        Command::Datum { algebra } => commands::datum(&params, *algebra)?,
        Command::Decomp { order, witnesses } => commands::decomp(&params, *order, *witnesses),
        Command::Verify {
            action: VerifyAction::All,
        } => {
            let (out, failed) = commands::verify_all(&params);
            failures = failed;
            out
        }
    };
    let text = output.render(cli.global.format);
    std::io::stdout()
        .write_all(text.as_bytes())
        .map_err(|source| CliError::Output {
            path: "<stdout>".into(),
            source,
        })?;
    if let Some(path) = &cli.global.golden {
        match fs::read_to_string(path) {
            Ok(expected) if expected == text => {}
            Ok(_) => return Err(CliError::GoldenMismatch { path: path.clone() }),
            Err(_) => fs::write(path, &text).map_err(|source| CliError::Output {
                path: path.clone(),
                source,
            })?,
        }
    }
    if failures > 0 {
        return Err(CliError::VerificationFailed(failures));
    }
    Ok(())
}
