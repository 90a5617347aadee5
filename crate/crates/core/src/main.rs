use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use minorbit::cli::{self, Cli};

fn main() -> ExitCode {
    let outcome = cli::run(Cli::parse());
    print!("{}", outcome.stdout);
    std::io::stdout().flush().ok();
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
