use clap::Parser;

use jjalg_cli::report::EXIT_INPUT_ERROR;
use jjalg_cli::{run, Cli, Format};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Machine => println!("{}", report.to_json()),
            }
            std::process::exit(report.exit_code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(EXIT_INPUT_ERROR);
        }
    }
}
