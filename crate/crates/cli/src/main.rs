use std::io::{self, Write};
use std::panic;
use std::process::ExitCode;

use clap::Parser;
use dmod_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let result = panic::catch_unwind(|| {
        let mut out = stdout.lock();
        let r = execute(&cli, &mut out);
        let _ = out.flush();
        r
    });
    match result {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("dmod: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(_) => ExitCode::from(2),
    }
}
