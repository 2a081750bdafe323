//! Verification runs over the workspace crates, reported as JSON.
//!
//! Every subcommand produces a [`SuiteReport`]: a list of checks sorted by id,
//! each with the statement it tests, the expected and computed values, and a
//! residual. The binary `lmhs` renders that report as JSON or as a table.

mod cli;
mod config;
mod error;
mod report;
mod session;
pub mod suites;

pub use cli::{AsymptoticsArgs, CicyArgs, Cli, Command, ConstantsArgs, GlobalArgs, RecognizeArgs, Suite, TableSource};
pub use config::{FileConfig, RunConfig, ENV_PREFIX, SUITE_KEYS};
pub use error::CliError;
pub use report::{Check, Environment, SuiteReport};
pub use session::Session;

use std::io::Write;
use std::time::Instant;

/// Runs one subcommand against a session.
pub fn run(command: &Command, session: &Session) -> Result<SuiteReport, CliError> {
    let start = Instant::now();
    let mut report = match command {
        Command::Cicy(args) => suites::cicy::run(session, args)?,
        Command::Constants(args) => suites::constants::run(session, args)?,
        Command::Verify { suite, source } => suites::verify::run(session, *suite, *source)?,
        Command::Asymptotics(args) => suites::asymptotics::run(session, args)?,
        Command::Recognize(args) => suites::recognize::run(session, args)?,
    };
    report.wall_time_s = Some(start.elapsed().as_secs_f64());
    Ok(report.finish())
}

/// Parses configuration, runs the command and writes the rendered report.
/// Returns the process exit code: 0 if every check passed, 1 otherwise.
pub fn execute(cli: &Cli) -> Result<u8, CliError> {
    let config = RunConfig::resolve(&cli.global)?;
    let out = config.out.clone();
    let session = Session::new(config)?;
    let mut report = run(&cli.command, &session)?;
    if !cli.global.timing {
        report.wall_time_s = None;
    }
    let rendered = if cli.global.table { report.to_table() } else { report.to_json() };
    match out {
        Some(path) => {
            std::fs::write(&path, rendered.as_bytes()).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            eprintln!("{}", report.summary());
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{rendered}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(CliError::Io(e.to_string())),
                _ => {}
            }
        }
    }
    Ok(report.exit_code())
}
