use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use asdl::demo::{compile, TargetMetrics};

/// Compile a mini-language program to a pickle of `rcc.program`.
#[derive(Parser)]
#[command(name = "minircc", version)]
struct Cli {
    /// Source file (`.mx`).
    source: PathBuf,
    #[arg(short = 'o', long = "out")]
    out: PathBuf,
    /// Target metrics: 32 or 64.
    #[arg(long, default_value = "32")]
    metrics: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let Some(metrics) = TargetMetrics::named(&cli.metrics) else {
        eprintln!("minircc: unknown metrics `{}`; use 32 or 64", cli.metrics);
        return ExitCode::from(2);
    };
    let name = cli.source.display();
    let src = match fs::read_to_string(&cli.source) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("minircc: {name}: {e}");
            return ExitCode::from(2);
        }
    };
    let bytes = match compile(&src, &metrics) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("{name}:{e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = fs::write(&cli.out, bytes) {
        eprintln!("{}: {e}", cli.out.display());
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
