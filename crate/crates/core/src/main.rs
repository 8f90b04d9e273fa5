use clap::Parser;
use pantsbound::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
