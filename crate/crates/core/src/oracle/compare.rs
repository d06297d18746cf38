use serde::{Deserialize, Serialize};

use super::grid::Grid;
use super::ground::{solve_grid, OracleOptions, OracleSummary};
use crate::error::{Error, Result};
use crate::model::{sweep, ModelSolution, PhysicalParams};

/// Energy the model approaches for large `x`: two independent wells.
pub const MODEL_ASYMPTOTIC_ENERGY: f64 = -1.0;

/// Analytic model energies next to the grid ground states with and without
/// the repulsion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub model: Vec<ModelSolution>,
    /// Oracle ground state at `λ = 0`.
    pub uncorrelated: OracleSummary,
    /// Oracle ground state at the requested `λ`.
    pub correlated: OracleSummary,
    pub model_asymptote: f64,
}

impl ComparisonReport {
    /// `E_model(x) − E_oracle(λ)` for each model row.
    pub fn model_minus_correlated(&self) -> Vec<f64> {
        self.model
            .iter()
            .map(|m| m.energy - self.correlated.energy)
            .collect()
    }

    /// `E_oracle(λ = 0) − (−1)`: discretization error of the shared
    /// uncorrelated limit.
    pub fn uncorrelated_gap(&self) -> f64 {
        self.uncorrelated.energy - self.model_asymptote
    }

    /// `E_oracle(λ) − E_oracle(0)`.
    pub fn correlation_shift(&self) -> f64 {
        self.correlated.energy - self.uncorrelated.energy
    }
}

/// Solves the model at every `x` and the 2D grid problem at `λ = 0` and at
/// `params.lambda()`.
pub fn compare_model_oracle(
    x_values: &[f64],
    grid: &Grid,
    params: &PhysicalParams,
    model_tol: f64,
    oracle: &OracleOptions,
) -> Result<ComparisonReport> {
    if grid.dim() != 2 {
        return Err(Error::Grid("the comparison needs a 2D grid".into()));
    }
    let model = sweep(x_values, model_tol)?;
    let uncorrelated = solve_grid(grid, &params.with_lambda(0.0)?, oracle)?.summary();
    let correlated = if params.lambda() == 0.0 {
        uncorrelated.clone()
    } else {
        solve_grid(grid, params, oracle)?.summary()
    };
    Ok(ComparisonReport {
        model,
        uncorrelated,
        correlated,
        model_asymptote: MODEL_ASYMPTOTIC_ENERGY,
    })
}
