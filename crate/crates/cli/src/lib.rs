//! Command-line front end: expression parsing, dispatch and JSON reports.

pub mod commands;
pub mod error;
pub mod parse;
pub mod report;
pub mod verify;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::Map;

pub use error::CliError;
pub use report::Report;

use commands::{execute, Cli, Inputs};

/// Rendered output and exit code for `argv` (program name first).
pub fn run<I, S>(argv: I) -> (String, i32)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return (e.render().to_string(), 0);
        }
        Err(e) => {
            let message = e.kind().to_string();
            let detail = e.render().to_string();
            let first = detail.lines().next().unwrap_or(&message).trim_start_matches("error: ").to_string();
            let report = Report {
                command: argv.get(1).cloned().unwrap_or_default(),
                inputs: Map::new(),
                outcome: Err(CliError::Usage(first)),
                seed: None,
            };
            return (report.render(argv.iter().any(|a| a == "--pretty")), 2);
        }
    };
    let mut inputs = Inputs { map: Map::new() };
    let outcome = execute(&cli, &mut inputs);
    let passed = outcome.as_ref().map_or(true, |o| o.passed);
    let report = Report {
        command: cli.command.name().to_string(),
        inputs: inputs.map,
        outcome: outcome.map(|o| o.result),
        seed: cli.seed,
    };
    let code = if passed { report.exit_code() } else { 1 };
    (report.render(cli.pretty), code)
}
