mod args;
mod commands;
mod emit;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::commands::Failure;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            use clap::CommandFactory;
            Cli::command()
                .error(clap::error::ErrorKind::ValueValidation, msg)
                .exit()
        }
        Err(Failure::Runtime(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(3)
        }
    }
}
