use clap::Parser;
use maxsurf_cli::commands::{run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { maxsurf_cli::exit::PARSE } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("maxsurf: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
