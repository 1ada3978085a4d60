//! `gonal-slope`: exact slope invariants, derived slope bounds, sweeps and
//! the verification suite from the command line.

mod args;
mod commands;
mod output;
mod scenario;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, Outcome, EXIT_INPUT};
use output::Format;

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Slope(a) => commands::cmd_slope(a),
        Command::Bound(a) => commands::cmd_bound(a),
        Command::Sweep(a) => commands::cmd_sweep(a),
        Command::Verify(a) => commands::cmd_verify(a),
        Command::Report(a) => commands::cmd_report(a),
    }
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    // a closed pipe is not an error worth reporting
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            let format = cli.format.or(outcome.format).unwrap_or(Format::Table);
            emit(&outcome.report.render(format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let Some(report) = &e.output {
                emit(&report.render(cli.format.unwrap_or(Format::Table)));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
