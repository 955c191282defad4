use clap::Parser;
use pyramidion_core::cli;

fn main() {
    let args = cli::Cli::parse();
    std::process::exit(cli::run(args));
}
