use std::io::Write;

use clap::Parser;
use concord::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = execute(cli, &mut std::io::stdin().lock());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(outcome.code);
}
