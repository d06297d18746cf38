//! Grid solutions of the full two-particle Schrödinger equation.
//!
//! The Hamiltonian is discretized with second-order finite differences on a
//! uniform grid and its ground state found by inverse iteration. The result
//! makes no use of the analytic ansatz, so it can check it.

mod compare;
mod grid;
mod ground;
mod hamiltonian;

pub use compare::{compare_model_oracle, ComparisonReport, MODEL_ASYMPTOTIC_ENERGY};
pub use grid::{Grid, MIN_GRID_POINTS};
pub use ground::{
    certified_lower_bound, correlation_shift, eigensolver_shift, ground_state, ground_state_with,
    solve_grid, OracleOptions, OracleResult, OracleSummary, DEFAULT_ORACLE_TOL,
};
pub use hamiltonian::{hamiltonian, hamiltonian_1d, hamiltonian_2d, GridHamiltonian};

/// Default half-width of the box (bohr).
pub const DEFAULT_BOX: f64 = 12.0;
/// Default points per axis for 2D runs.
pub const DEFAULT_GRID_N: usize = 161;
