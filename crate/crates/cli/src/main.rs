use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use fsing_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    print!("{}", report.summary());
    // timing goes to the terminal only, so reports stay byte-stable
    println!("  elapsed {:.3}s", start.elapsed().as_secs_f64());
    if let Some(path) = &cli.out {
        if let Err(source) = std::fs::write(path, report.render()) {
            eprintln!("error: {}", CliError::Io { path: path.clone(), source });
            return ExitCode::from(1);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
