use clap::Parser;
use torus_square::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
