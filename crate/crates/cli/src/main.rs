use clap::Parser;

fn main() {
    let cli = genchar_cli::Cli::parse();
    std::process::exit(genchar_cli::run(&cli));
}
