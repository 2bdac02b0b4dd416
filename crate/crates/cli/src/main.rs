use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use resultant_cli::{render, run, exit_status, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli, &mut std::io::stdin()) {
        Ok(doc) => {
            let _ = std::io::stdout().write_all(render(&doc, cli.format).as_bytes());
            ExitCode::from(exit_status(&doc) as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
