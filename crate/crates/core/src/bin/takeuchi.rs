//! Batch front end: `takeuchi <command> --job <file> --out <file>
//! [--bounds N,D] [--seed <int>]`.
//!
//! Exit status: 0 when every verdict passes, 1 when a verification
//! fails, 2 on input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use takeuchi::job::{parse_job, COMMANDS};
use takeuchi::runner::run;
use takeuchi::Error;

#[derive(Parser)]
#[command(name = "takeuchi", version, about = "Exact computer algebra for Takeuchi smash products")]
struct Cli {
    /// One of: validate, smash, resolve, ext, verify-ext-theorem,
    /// tor-check, as-regular, nakayama.
    command: String,

    /// Path to the JSON job file.
    #[arg(long)]
    job: PathBuf,

    /// Path the JSON report is written to.
    #[arg(long)]
    out: PathBuf,

    /// Override the job's truncation bounds, as `N,D`.
    #[arg(long, value_parser = parse_bounds)]
    bounds: Option<(usize, usize)>,

    /// Override the job's seed for randomized validators.
    #[arg(long)]
    seed: Option<u64>,
}

fn parse_bounds(s: &str) -> Result<(usize, usize), String> {
    let (n, d) = s
        .split_once(',')
        .ok_or_else(|| "expected two comma-separated integers, e.g. 3,6".to_string())?;
    let n = n.trim().parse().map_err(|e| format!("bad homological bound: {e}"))?;
    let d = d.trim().parse().map_err(|e| format!("bad internal bound: {e}"))?;
    Ok((n, d))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: &Cli) -> Result<ExitCode, Error> {
    if !COMMANDS.contains(&cli.command.as_str()) {
        return Err(Error::Input(format!(
            "unknown command {:?}; expected one of {:?}",
            cli.command, COMMANDS
        )));
    }
    let text = fs::read_to_string(&cli.job)?;
    let mut job = parse_job(&text)?;
    job.command = cli.command.clone();
    if let Some(bounds) = cli.bounds {
        job.bounds = bounds;
    }
    if let Some(seed) = cli.seed {
        job.seed = seed;
    }
    takeuchi::job::validate_job(&job)?;
    let report = run(&job)?;
    fs::write(&cli.out, report.to_json()? + "\n")?;
    print!("{}", report.render_text());
    Ok(ExitCode::from(report.exit_code() as u8))
}
