use std::io;
use std::process::ExitCode;

use clap::Parser;

use bicomm_cli::args::Cli;
use bicomm_cli::{execute, Status};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let stdout = io::stdout();
    match execute(cli, &mut stdout.lock()) {
        Ok(Status::Timeout) => {
            eprintln!("bicomm: time limit reached, results are partial");
            ExitCode::from(Status::Timeout as u8)
        }
        Ok(status) => ExitCode::from(status as u8),
        Err(failure) => {
            eprintln!("bicomm: {}", failure.message);
            ExitCode::from(failure.status as u8)
        }
    }
}
