use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

/// Read a pickle of `rcc.program` and print stack-machine assembly.
#[derive(Parser)]
#[command(name = "pass2", version)]
struct Cli {
    pickle: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let name = cli.pickle.display();
    let bytes = match fs::read(&cli.pickle) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("pass2: {name}: {e}");
            return ExitCode::from(2);
        }
    };
    match asdl::demo::pass2(&bytes) {
        Ok(asm) => {
            if io::stdout().write_all(asm.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{name}: {e}");
            ExitCode::from(1)
        }
    }
}
