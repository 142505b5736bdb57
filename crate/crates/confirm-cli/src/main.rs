use clap::Parser;

fn main() {
    let cli = confirm_cli::Cli::parse();
    match confirm_cli::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            std::process::exit(out.code);
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}
