use std::process::ExitCode;

use clap::Parser;
use wq_cli::app::{execute, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let outcome = execute(cli);
    let stream_ok = match &outcome.out {
        Some(path) => std::fs::write(path, &outcome.output).map_err(|e| eprintln!("error: writing {}: {e}", path.display())).is_ok(),
        None if outcome.code == EXIT_USAGE => {
            eprint!("{}", outcome.output);
            true
        }
        None => {
            print!("{}", outcome.output);
            true
        }
    };
    if !stream_ok {
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(outcome.code as u8)
}
