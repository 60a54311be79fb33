//! Thin command-line front end: scenario integration reports, the
//! self-verification battery, and the structure-constant table.
//!
//! Exit codes: 0 success, 2 input or schema error, 3 numeric failure,
//! 4 verification failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sta_phase::error::{PhaseError, ScenarioError};
use sta_phase::ga::cayley_table_text;
use sta_phase::phase::integrate_phases;
use sta_phase::report::PhaseReport;
use sta_phase::scenario::parse_scenario;
use sta_phase::verify::{all_passed, run_verification, VerifyConfig};

#[derive(Parser)]
#[command(name = "sta-phase", version, about = "Dirac-spinor phase rates in spacetime algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Formula {
    Full,
    Simple,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate both phase-rate families over a scenario and emit the report.
    Phases {
        /// Scenario description (JSON).
        #[arg(long)]
        scenario: PathBuf,
        /// Override the step count from the scenario file.
        #[arg(long)]
        steps: Option<usize>,
        /// Family to show in the stderr summary; the report always carries both.
        #[arg(long, value_enum, default_value_t = Formula::Both)]
        formula: Formula,
        /// Output path. Relative paths resolve against STA_PHASE_OUT_DIR
        /// when that is set. Without this the report goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Emit rates per unit proper time in the series (totals are
        /// unaffected).
        #[arg(long)]
        proper_rates: bool,
    },
    /// Run the built-in verification battery.
    Verify {
        /// Override every check tolerance with one value.
        #[arg(long)]
        tol: Option<f64>,
        /// Corrupt one structure constant in the checked table copy; the
        /// battery must then fail.
        #[arg(long, hide = true)]
        inject_sign_flip: bool,
        /// Emit outcomes as JSON instead of text lines.
        #[arg(long)]
        json: bool,
    },
    /// Print the 16x16 geometric-product sign table.
    Table,
}

enum AppError {
    Input(String),
    Numeric(String),
    Verification,
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Input(_) => 2,
            AppError::Numeric(_) => 3,
            AppError::Verification => 4,
        }
    }
}

impl From<ScenarioError> for AppError {
    fn from(e: ScenarioError) -> AppError {
        AppError::Input(e.to_string())
    }
}

impl From<PhaseError> for AppError {
    fn from(e: PhaseError) -> AppError {
        AppError::Numeric(e.to_string())
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> AppError {
        AppError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                AppError::Input(msg) => eprintln!("error: {msg}"),
                AppError::Numeric(msg) => eprintln!("numeric error: {msg}"),
                AppError::Verification => eprintln!("verification failed"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Phases {
            scenario,
            steps,
            formula,
            out,
            format,
            proper_rates,
        } => phases(scenario, steps, formula, out, format, proper_rates),
        Command::Verify {
            tol,
            inject_sign_flip,
            json,
        } => verify(tol, inject_sign_flip, json),
        Command::Table => {
            print!("{}", cayley_table_text());
            Ok(())
        }
    }
}

fn phases(
    scenario_path: PathBuf,
    steps: Option<usize>,
    formula: Formula,
    out: Option<PathBuf>,
    format: Format,
    proper_rates: bool,
) -> Result<(), AppError> {
    let text = std::fs::read_to_string(&scenario_path)
        .map_err(|e| AppError::Input(format!("{}: {e}", scenario_path.display())))?;
    let mut parsed = parse_scenario(&text)?;
    if let Some(n) = steps {
        parsed.steps = n;
        parsed.echo.steps = n;
    }
    let traj = &parsed.trajectory;
    let run = integrate_phases(
        |t| traj.kinematics_at(t),
        traj.duration,
        parsed.steps,
        proper_rates,
    )?;
    let report = PhaseReport::new(parsed.echo, &run, proper_rates);

    let f = &report.finals;
    match formula {
        Formula::Full | Formula::Both => eprintln!(
            "full:   delta = {:+.9}  gamma = {:+.9}",
            f.delta_full, f.gamma_full
        ),
        Formula::Simple => {}
    }
    match formula {
        Formula::Simple | Formula::Both => eprintln!(
            "simple: delta = {:+.9}  gamma = {:+.9}",
            f.delta_simple, f.gamma_simple
        ),
        Formula::Full => {}
    }
    eprintln!(
        "total -dchi/2 = {:+.9}  ledger residual = {:.3e}",
        f.total, f.ledger_residual
    );

    let body = match format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    match out {
        Some(path) => {
            let path = resolve_out(path);
            std::fs::write(&path, body)
                .map_err(|e| AppError::Input(format!("{}: {e}", path.display())))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{body}"),
    }
    Ok(())
}

/// Relative --out paths land in STA_PHASE_OUT_DIR when that is set.
fn resolve_out(path: PathBuf) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var("STA_PHASE_OUT_DIR") {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path
}

fn verify(tol: Option<f64>, inject_sign_flip: bool, json: bool) -> Result<(), AppError> {
    let outcomes = run_verification(&VerifyConfig {
        tolerance_override: tol,
        inject_sign_flip,
    });
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&outcomes).expect("outcome serialization")
        );
    } else {
        for o in &outcomes {
            println!(
                "[{}] {:24} max residual {:.3e}  tolerance {:.3e}",
                if o.pass { "PASS" } else { "FAIL" },
                o.name,
                o.max_residual,
                o.tolerance
            );
        }
    }
    if all_passed(&outcomes) {
        Ok(())
    } else {
        Err(AppError::Verification)
    }
}
