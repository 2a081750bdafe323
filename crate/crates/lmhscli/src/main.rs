use std::process::ExitCode;

use clap::Parser;
use lmhscli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match lmhscli::execute(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
