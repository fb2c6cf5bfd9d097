use std::process::ExitCode;

use clap::Parser;
use hvlab_cli::{command_name, execute, render, resolve_config, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    let run = || -> anyhow::Result<(String, bool)> {
        let cfg = resolve_config(&cli)?;
        let outcome = execute(&cfg, &cli.command)?;
        Ok((
            render(&cfg, command_name(&cli.command), &outcome),
            outcome.passed,
        ))
    };
    match run() {
        Ok((out, passed)) => {
            println!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
