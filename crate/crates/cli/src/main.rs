use std::process::ExitCode;

use clap::Parser;
use spinrep_cli::{emit, run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(&cli, &args) {
        Ok(outcome) => {
            if let Err(e) = emit(cli.out.as_deref(), &outcome.text) {
                eprintln!("spinrep: cannot write output: {e}");
                return ExitCode::from(EXIT_USAGE as u8);
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(f) => {
            eprintln!("spinrep: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
