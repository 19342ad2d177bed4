//! Command-line surface: `analyze`, `sweep`, `verify` and `families`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain
//! error, 4 I/O error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::game::{GameDefinition, PayoffMatrix};
use crate::quantum::Entanglement;
use crate::{report, sweep, DEFAULT_SWEEP_RESOLUTION, DEFAULT_VERIFY_GRID, TOL_VERIFY};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_PARSE_ERROR: i32 = 2;
pub const EXIT_DOMAIN_ERROR: i32 = 3;
pub const EXIT_IO_ERROR: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "mwgames",
    version,
    about = "Quantized 2x2 symmetric games: equilibria, regimes and entanglement sweeps"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a game and report its equilibria at one entanglement value.
    Analyze {
        /// JSON game definition with fields "a", "b", "c", "d".
        #[arg(long)]
        game: PathBuf,
        /// Entanglement parameter X = |alpha|^2 in [0, 1].
        #[arg(long)]
        x: f64,
        /// Deviation-grid size for the verification summary.
        #[arg(long, default_value_t = DEFAULT_VERIFY_GRID)]
        grid: usize,
        /// Verification tolerance on payoff improvements.
        #[arg(long, default_value_t = TOL_VERIFY)]
        tol: f64,
    },
    /// Sweep the equilibrium payoffs over X in [0, 1] and write CSV.
    Sweep {
        #[arg(long)]
        game: PathBuf,
        /// Number of sweep steps; the CSV has resolution + 1 rows.
        #[arg(long, default_value_t = DEFAULT_SWEEP_RESOLUTION)]
        resolution: usize,
        /// Output CSV path (written atomically).
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the oracle checks at one entanglement value; exit 1 on failure.
    Verify {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        x: f64,
        /// Grid size for deviation search and engine cross-checks.
        #[arg(long, default_value_t = DEFAULT_VERIFY_GRID)]
        grid: usize,
        #[arg(long, default_value_t = TOL_VERIFY)]
        tol: f64,
    },
    /// Compare the Chicken/Leader/Secret Meeting exemplars over X.
    Families {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SWEEP_RESOLUTION)]
        resolution: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Parse(String),
    Domain(Error),
    Io(String),
    VerificationFailed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE_ERROR,
            CliError::Domain(_) => EXIT_DOMAIN_ERROR,
            CliError::Io(_) => EXIT_IO_ERROR,
            CliError::VerificationFailed => EXIT_VERIFICATION_FAILED,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Parse(msg) => format!("parse error: {msg}"),
            CliError::Domain(e) => format!("domain error: {e}"),
            CliError::Io(msg) => format!("i/o error: {msg}"),
            CliError::VerificationFailed => "verification failed".to_string(),
        }
    }
}

/// Parses the process arguments, runs the command, and returns the exit
/// code. Diagnostics go to stderr, reports to stdout.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("mwgames: {}", e.message());
            e.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Analyze { game, x, grid, tol } => {
            let (matrix, name) = load_game(&game)?;
            let x = Entanglement::new(x)?;
            let report = report::analyze(&matrix, name, x, grid, tol)?;
            print_json(&report)
        }
        Command::Sweep {
            game,
            resolution,
            out,
        } => {
            let (matrix, _) = load_game(&game)?;
            let table = sweep::sweep(&matrix, resolution)?;
            let mut buffer = Vec::new();
            sweep::write_sweep_csv(&table, &mut buffer)
                .map_err(|e| CliError::Io(e.to_string()))?;
            write_atomically(&out, &buffer)
        }
        Command::Verify { game, x, grid, tol } => {
            let (matrix, name) = load_game(&game)?;
            let x = Entanglement::new(x)?;
            let report = report::verify(&matrix, name, x, grid, tol)?;
            let passed = report.passed;
            print_json(&report)?;
            if passed {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
        Command::Families { out, resolution } => {
            let rows = sweep::families_table(resolution)?;
            let mut buffer = Vec::new();
            sweep::write_families_csv(&rows, &mut buffer)
                .map_err(|e| CliError::Io(e.to_string()))?;
            write_atomically(&out, &buffer)
        }
    }
}

fn load_game(path: &Path) -> Result<(PayoffMatrix, Option<String>), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let def: GameDefinition = serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let matrix = def.matrix()?;
    Ok((matrix, def.name))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Io(e.to_string()))?;
    println!("{text}");
    Ok(())
}

/// Writes the buffer to a sibling temporary file and renames it into place,
/// so the output path never holds a partial file.
fn write_atomically(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let tmp = path.with_extension("tmp");
    let io_err = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let mut file = fs::File::create(&tmp).map_err(io_err)?;
    file.write_all(bytes).map_err(io_err)?;
    file.sync_all().map_err(io_err)?;
    drop(file);
    fs::rename(&tmp, path).map_err(io_err)?;
    Ok(())
}
