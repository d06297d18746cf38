//! `deltabound`: solve, sweep and cross-check the two-electron delta model.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 convergence failure.

mod commands;
mod plot;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "deltabound", version, about, allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve the secular equation for one separation and print x,k,energy.
    Solve(SolveArgs),
    /// Solve on evenly spaced separations and write a CSV table.
    Sweep(SweepArgs),
    /// Ground state of the finite-difference Hamiltonian, as JSON.
    Oracle(OracleArgs),
    /// Model sweep next to oracle energies with and without repulsion.
    Compare(CompareArgs),
    /// Plot a column of a sweep CSV against x.
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SolveArgs {
    /// Separation parameter x (bohr, > 0).
    #[arg(long)]
    pub x: f64,
    /// Root tolerance on k (1/bohr) and on the secular residual.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SweepArgs {
    /// First separation (bohr, > 0).
    #[arg(long)]
    pub x_min: f64,
    /// Last separation (bohr, >= x-min).
    #[arg(long)]
    pub x_max: f64,
    /// Number of rows, endpoints included (>= 1).
    #[arg(long)]
    pub steps: usize,
    /// Root tolerance on k (1/bohr).
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Output CSV path (default: standard output).
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct OracleArgs {
    /// Number of particles / grid dimension (1 or 2).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub dim: u8,
    /// Well strength alpha (hartree·bohr, > 0).
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Repulsion strength lambda (hartree·bohr, >= 0; ignored in 1D).
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    /// Grid points per axis (odd, >= 31).
    #[arg(long, default_value_t = deltabound::oracle::DEFAULT_GRID_N)]
    pub grid_n: usize,
    /// Box half-width L (bohr); the grid spans [-L, L].
    #[arg(long = "box", default_value_t = deltabound::oracle::DEFAULT_BOX)]
    pub half_length: f64,
    /// Eigen-residual tolerance (hartree).
    #[arg(long, default_value_t = deltabound::oracle::DEFAULT_ORACLE_TOL)]
    pub tol: f64,
    /// Output JSON path (default: standard output).
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Also dump the normalized wavefunction as little-endian f64 (bohr^-dim/2).
    #[arg(long)]
    pub wavefunction: Option<std::path::PathBuf>,
    /// Spread matrix-vector products over threads (results are unchanged).
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct CompareArgs {
    /// First separation (bohr, > 0).
    #[arg(long, default_value_t = 1.0)]
    pub x_min: f64,
    /// Last separation (bohr, >= x-min).
    #[arg(long, default_value_t = 10.0)]
    pub x_max: f64,
    /// Number of model rows, endpoints included (>= 0; 0 gives oracle rows only).
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    /// Repulsion strength lambda for the correlated oracle run (hartree·bohr).
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    /// Grid points per axis (odd, >= 31).
    #[arg(long, default_value_t = deltabound::oracle::DEFAULT_GRID_N)]
    pub grid_n: usize,
    /// Box half-width L (bohr).
    #[arg(long = "box", default_value_t = deltabound::oracle::DEFAULT_BOX)]
    pub half_length: f64,
    /// Oracle eigen-residual tolerance (hartree).
    #[arg(long, default_value_t = deltabound::oracle::DEFAULT_ORACLE_TOL)]
    pub tol: f64,
    /// Model root tolerance on k (1/bohr).
    #[arg(long, default_value_t = 1e-12)]
    pub model_tol: f64,
    /// Output CSV path (default: standard output).
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Spread matrix-vector products over threads (results are unchanged).
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Column {
    /// Decay constant k (1/bohr).
    K,
    /// Energy (hartree).
    Energy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotFormat {
    Svg,
    Gnuplot,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// Sweep CSV with header x,k,energy.
    #[arg(long)]
    pub input: std::path::PathBuf,
    /// Column to plot against x (bohr).
    #[arg(long, value_enum, default_value_t = Column::K)]
    pub column: Column,
    /// Output path for the plot.
    #[arg(long)]
    pub out: std::path::PathBuf,
    /// SVG chart or a gnuplot script with inline data.
    #[arg(long, value_enum, default_value_t = PlotFormat::Svg)]
    pub format: PlotFormat,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Solve(args) => commands::solve(&args),
        Command::Sweep(args) => commands::sweep(&args),
        Command::Oracle(args) => commands::oracle(&args),
        Command::Compare(args) => commands::compare(&args),
        Command::Plot(args) => commands::plot(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("deltabound: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    let convergence = e
        .chain()
        .filter_map(|c| c.downcast_ref::<deltabound::Error>())
        .any(|c| c.is_convergence_failure());
    if convergence {
        2
    } else {
        1
    }
}
