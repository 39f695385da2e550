use std::process::ExitCode;

use clap::Parser;
use leibniz_forge_cli::app::{render, run, Cli};

fn main() -> ExitCode {
    if let Some(n) = std::env::var("LEIBNIZ_FORGE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // Fails only if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let cli = Cli::parse();
    let report = run(&cli);
    print!("{}", render(&report, cli.format));
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
