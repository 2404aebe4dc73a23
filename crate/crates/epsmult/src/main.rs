use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use epsmult::{run, CliError, ExitStatus, RunConfig};

fn write_output(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    let status = match run(&cfg) {
        Ok(outcome) => match write_output(&cfg, &outcome.render(cfg.format)) {
            Ok(()) => outcome.status,
            Err(e) => {
                eprintln!("error: {e}");
                e.status()
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            e.status()
        }
    };
    if status == ExitStatus::Inconclusive {
        eprintln!("warning: some values did not stabilize; see the report");
    }
    ExitCode::from(status.code() as u8)
}
