use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = klein_bu::Cli::parse();
    match klein_bu::run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprint!("{}", e.message());
            if !e.message().ends_with('\n') {
                eprintln!();
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
