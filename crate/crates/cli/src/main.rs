use std::process::ExitCode;

use clap::Parser;
use stiffgap::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match cli.run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("stiffgap: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
