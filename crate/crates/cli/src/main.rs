use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use schubert_smt_cli::{run, thread_cap, Cli, CliError, THREADS_ENV};

fn configure_threads() -> Result<(), CliError> {
    let value = std::env::var(THREADS_ENV).ok();
    if let Some(k) = thread_cap(value.as_deref())? {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    Ok(())
}

fn emit(cli: &Cli, rendered: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, rendered).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(&cli));
    match result {
        Ok(output) => {
            if let Err(e) = emit(&cli, &output.render(cli.text)) {
                eprintln!("error: {e:#}");
                return ExitCode::from(3);
            }
            ExitCode::from(output.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
