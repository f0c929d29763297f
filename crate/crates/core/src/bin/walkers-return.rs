use std::process::ExitCode;

use clap::Parser;
use walkers_return::cli::{execute, Command, EXIT_USAGE};

/// Return probabilities of one-dimensional quantum and correlated random walks.
#[derive(Parser)]
#[command(name = "walkers-return", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = match &cli.command {
        Command::Return(c) | Command::Genfunc(c) | Command::Dist(c) => c.out.clone(),
        Command::Verify { .. } => None,
    };
    let code = match execute(&cli.command) {
        Ok(outcome) => {
            let written = match &out_path {
                Some(p) => std::fs::write(p, &outcome.text),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => outcome.exit_code(),
                Err(e) => {
                    eprintln!("walkers-return: cannot write output: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            eprintln!("walkers-return: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
