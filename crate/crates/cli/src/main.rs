use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mcmrep_cli::error::{EXIT_INTERNAL, EXIT_INVALID};
use mcmrep_cli::{parse_shifts, run, AlgebraSource, CliError, Command, Job, Output};

#[derive(Parser)]
#[command(name = "mcmrep", version, about = "Representation varieties of graded MCM modules")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a presentation and its normalization
    Validate(Common),
    /// Hilbert series, first coefficients and Hilbert polynomial
    Hilbert(Common),
    /// Defining equations of the representation variety
    Repeqs(Common),
    /// Check that a module is a point of the variety
    CheckPoint(Common),
    /// Decide whether two modules are isomorphic
    Isom(Common),
    /// Decide whether a module is indecomposable
    Indec(Common),
    /// Count orbits over a finite field
    Census(Common),
    /// Generator degree spread and normalized type
    Spread(Common),
    /// The ideals I_n of the x2 family
    Family(Common),
}

#[derive(Args)]
struct Common {
    /// Built-in algebra (x2)
    #[arg(long, conflicts_with = "algebra")]
    family: Option<String>,
    /// Algebra file
    #[arg(long)]
    algebra: Option<PathBuf>,
    /// Shift type, e.g. 0,1
    #[arg(long, allow_hyphen_values = true)]
    shifts: Option<String>,
    /// Work over F_q
    #[arg(long)]
    q: Option<u64>,
    /// Family index
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    /// Module: R, I, I_<n>, zero or coordinates a,b,..., with optional twist "(s)"
    #[arg(long, allow_hyphen_values = true)]
    module: Vec<String>,
    /// Write a JSON report to this path
    #[arg(long)]
    json: Option<PathBuf>,
    /// Degree through which series are cross-checked
    #[arg(long, default_value_t = 12)]
    degree_bound: u64,
    /// Maximum number of enumerated candidates
    #[arg(long, default_value_t = 10_000_000)]
    budget: u128,
}

fn job(command: Command, c: Common) -> Result<(Job, Option<PathBuf>), CliError> {
    let mut j = Job::new(command);
    j.algebra = match (c.family, c.algebra) {
        (Some(f), _) => Some(AlgebraSource::Family(f)),
        (None, Some(p)) => Some(AlgebraSource::File(p)),
        (None, None) => None,
    };
    j.shifts = c.shifts.as_deref().map(parse_shifts).transpose()?;
    j.q = c.q;
    j.n = c.n;
    j.modules = c.module;
    j.degree_bound = c.degree_bound;
    j.budget = c.budget;
    Ok((j, c.json))
}

fn emit(out: &Output, json: Option<&PathBuf>) -> Result<(), CliError> {
    print!("{}", out.text);
    if let Some(p) = json {
        std::fs::write(p, &out.json).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match cli.command {
        Cmd::Validate(c) => (Command::Validate, c),
        Cmd::Hilbert(c) => (Command::Hilbert, c),
        Cmd::Repeqs(c) => (Command::Repeqs, c),
        Cmd::CheckPoint(c) => (Command::CheckPoint, c),
        Cmd::Isom(c) => (Command::Isom, c),
        Cmd::Indec(c) => (Command::Indec, c),
        Cmd::Census(c) => (Command::Census, c),
        Cmd::Spread(c) => (Command::Spread, c),
        Cmd::Family(c) => (Command::Family, c),
    };
    let result = job(command, common).and_then(|(j, json)| {
        // a panic inside the engine is an internal error, not a usage error
        let ran = std::panic::catch_unwind(|| run(&j))
            .unwrap_or_else(|_| Err(CliError::Internal("engine panicked".into())));
        match ran {
            Ok(out) => emit(&out, json.as_ref()),
            Err(CliError::Rejected(out)) => {
                emit(&out, json.as_ref())?;
                Err(CliError::Rejected(out))
            }
            Err(e) => Err(e),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Rejected(_)) => ExitCode::from(EXIT_INVALID as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let code = e.exit_code();
            ExitCode::from(if (0..=255).contains(&code) { code as u8 } else { EXIT_INTERNAL as u8 })
        }
    }
}
