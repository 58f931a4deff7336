use clap::Parser;

fn main() {
    let cli = bullhouse::cli::Cli::parse();
    let code = bullhouse::cli::run(cli, &mut std::io::stdout().lock());
    std::process::exit(code);
}
