use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use kroncomb_cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("kroncomb: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
