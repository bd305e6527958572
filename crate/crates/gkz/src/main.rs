use clap::Parser;
use gkz::commands::Cli;

fn main() {
    let cli = Cli::parse();
    let out = gkz::run(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
