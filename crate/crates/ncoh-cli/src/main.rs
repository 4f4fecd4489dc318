use clap::Parser;
use ncoh_cli::args::{Cli, Command};
use ncoh_cli::commands;

fn main() {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify(args) => commands::verify::run(args),
        Command::Cohomology(args) => commands::cohomology::run(args),
        Command::Restricted(args) => commands::restricted::run(args),
        Command::Matrix(args) => commands::matrix::run(args),
        Command::Extensions(args) => commands::extensions::run(args),
        Command::Sweep(args) => commands::sweep::run(args),
    };
    match outcome {
        Ok(outcome) => std::process::exit(outcome.code()),
        Err(usage) => {
            eprintln!("error: {usage}");
            std::process::exit(2);
        }
    }
}
