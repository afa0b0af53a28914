use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    cayley_plane::cli::run(&cayley_plane::cli::Cli::parse())
}
