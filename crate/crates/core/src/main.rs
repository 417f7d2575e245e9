use clap::Parser;
use tropical_cubic::cli::{execute, exit_code, Cli};

fn main() {
    let cli = Cli::parse();
    if let Err(e) = execute(&cli) {
        eprintln!("tropcubic: {e}");
        std::process::exit(exit_code(&e));
    }
}
