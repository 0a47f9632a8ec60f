use std::{io::Write, path::PathBuf, process::ExitCode};

use clap::Parser;
use symtele::{build_report, complex::parse_complex, CliError, Command, Format, RunConfig};
use symtele_core::C64;

#[derive(Parser, Debug)]
#[command(name = "symtele", version, about = "Teleportation verification for distinguishable and identical particles")]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Input amplitude of |H> (or |0>), e.g. 0.6 or 0.6+0.0i.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex, requires = "beta")]
    alpha: Option<C64>,
    /// Input amplitude of |V> (or |1>), e.g. 0.0+0.8i.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex, requires = "alpha")]
    beta: Option<C64>,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        command: cli.command,
        input: cli.alpha.zip(cli.beta),
        trials: cli.trials as usize,
        seed: cli.seed,
        format: cli.format,
        output: cli.out,
    };
    match run(&cfg) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cfg: &RunConfig) -> Result<ExitCode, CliError> {
    let report = build_report(cfg)?;
    let text = report.render(cfg.format);
    match &cfg.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    if report.passed() {
        return Ok(ExitCode::SUCCESS);
    }
    for c in report.failures() {
        eprintln!("FAIL {}: residual {:e} exceeds tolerance {:e}", c.name, c.residual, c.tolerance.unwrap_or(0.0));
    }
    Ok(ExitCode::from(1))
}
