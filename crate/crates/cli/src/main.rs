use std::io;
use std::process::ExitCode;

use acmkit::Cli;
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = acmkit::run(cli, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(status.code())
}
