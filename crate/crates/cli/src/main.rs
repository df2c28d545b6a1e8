mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use commands::CmdError;
use config::{Cli, Command, RunConfig, OUTPUT_DIR_ENV};

const EXIT_VIOLATION: u8 = 1;
const EXIT_CONFIG: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output_dir = std::env::var_os(OUTPUT_DIR_ENV).filter(|d| !d.is_empty()).map(PathBuf::from);
    let cfg = match RunConfig::from_cli(&cli.command, output_dir) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    let result = match &cli.command {
        Command::Fusion(_) => commands::fusion(&cfg),
        Command::Modular(_) => commands::modular(&cfg),
        Command::Duality(_) => commands::duality(&cfg),
        Command::Verify(_) => commands::verify(&cfg),
        Command::Twist(_) => commands::twist(&cfg),
    };
    let artifact = match result {
        Ok(a) => a,
        Err(CmdError::Config(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    if let Err(e) = output::emit(&cfg, &artifact) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_CONFIG);
    }
    if artifact.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    }
}
