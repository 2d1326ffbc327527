mod args;
mod commands;
mod output;
mod verify;

use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use output::{document, render, write_manifest, CliError, CliResult, ManifestInfo, EXIT_USAGE};

/// Subcommand arguments with the run-environment flags removed, so that
/// documents do not depend on thread counts or manifest paths.
fn normalized_argv(raw: &[String], name: &str) -> Vec<String> {
    let start = raw.iter().skip(1).position(|a| a == name).map_or(raw.len(), |i| i + 2);
    let mut out = Vec::new();
    let mut it = raw[start.min(raw.len())..].iter();
    while let Some(a) = it.next() {
        match a.as_str() {
            "--json" => {}
            "--threads" | "--manifest" => {
                it.next();
            }
            s if s.starts_with("--threads=") || s.starts_with("--manifest=") => {}
            _ => out.push(a.clone()),
        }
    }
    out
}

fn execute(cli: &Cli, raw: &[String]) -> CliResult<u8> {
    if cli.seed.is_some() {
        return Err(CliError::Usage("--seed is not accepted: every algorithm is deterministic".into()));
    }
    if cli.threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let max_states = commands::max_states()?;

    let start = Instant::now();
    let (name, argv, report) = match (&cli.verify, &cli.command) {
        (Some(_), Some(_)) => return Err(CliError::Usage("--verify takes no subcommand".into())),
        (None, None) => return Err(CliError::Usage("a subcommand or --verify is required".into())),
        (Some(path), None) => ("verify", vec![path.display().to_string()], verify::verify_file(path)?),
        (None, Some(cmd)) => (cmd.name(), normalized_argv(raw, cmd.name()), commands::run(cmd)?),
    };
    let text = render(&document(name, &argv, &report));
    print!("{text}");
    eprintln!("tilekit {name}: {} ({})", report.verdict.as_str(), report.summary);

    if let Some(Command::Aperiodic(a)) = &cli.command {
        if let Some(out) = &a.out {
            std::fs::write(out, &text)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", out.display())))?;
        }
    }
    if let Some(path) = &cli.manifest {
        let info = ManifestInfo {
            command: name,
            argv: &argv,
            threads: cli.threads,
            max_states,
            wall_time: start.elapsed(),
            output: &text,
        };
        write_manifest(path, &info)?;
    }
    Ok(report.verdict.exit_code())
}

fn main() -> ExitCode {
    let raw: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&raw) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match execute(&cli, &raw) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("tilekit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
