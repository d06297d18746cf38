use std::io::Write;

use serde::{Deserialize, Serialize};

use super::grid::Grid;
use super::hamiltonian::{hamiltonian, hamiltonian_1d, GridHamiltonian};
use crate::error::{Error, Result};
use crate::model::PhysicalParams;
use crate::numerics::{lowest_eigenpair_with, sturm, EigenOptions, Execution};

pub const DEFAULT_ORACLE_TOL: f64 = 1e-8;

// Bisection tolerance for the Sturm bound, relative to the eigenvalue.
const STURM_TOL: f64 = 1e-13;

#[derive(Debug, Clone)]
pub struct OracleOptions {
    /// Eigen-residual target `‖H v − E v‖₂` for the unit-norm vector.
    pub tol: f64,
    pub max_iter: usize,
    pub execution: Execution,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            tol: DEFAULT_ORACLE_TOL,
            max_iter: crate::numerics::eigen::DEFAULT_EIGEN_MAX_ITER,
            execution: Execution::Sequential,
        }
    }
}

impl OracleOptions {
    pub fn with_tol(tol: f64) -> Self {
        OracleOptions {
            tol,
            ..Self::default()
        }
    }
}

/// Ground state of a grid Hamiltonian.
#[derive(Debug, Clone)]
pub struct OracleResult {
    /// Hartree.
    pub energy: f64,
    /// Grid-ordered values with `Σ ψ² · h^dim = 1`.
    pub wavefunction: Vec<f64>,
    /// `‖H v − E v‖₂` for the unit Euclidean vector `v`.
    pub residual_norm: f64,
    pub grid: Grid,
    pub params: PhysicalParams,
    /// Shift used for the inverse iteration.
    pub shift: f64,
    pub iterations: usize,
    pub inner_iterations: usize,
}

/// The serialized form of an [`OracleResult`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub energy: f64,
    pub lambda: f64,
    pub alpha: f64,
    pub grid_n: usize,
    #[serde(rename = "box")]
    pub half_length: f64,
    pub residual: f64,
}

impl OracleResult {
    pub fn summary(&self) -> OracleSummary {
        OracleSummary {
            energy: self.energy,
            lambda: self.params.lambda(),
            alpha: self.params.alpha(),
            grid_n: self.grid.n(),
            half_length: self.grid.half_length(),
            residual: self.residual_norm,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.summary()).expect("summary has only plain fields")
    }

    /// Node value `ψ(i, j)` of a 2D result.
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.wavefunction[i * self.grid.n() + j]
    }

    /// Raw dump: three little-endian `u64` header words `(dim, n, n)` for 2D
    /// or `(dim, n, 1)` for 1D, then the values as little-endian `f64`,
    /// row-major.
    pub fn write_wavefunction<W: Write>(&self, mut out: W) -> Result<()> {
        let n = self.grid.n() as u64;
        let cols = if self.grid.dim() == 2 { n } else { 1 };
        for word in [self.grid.dim() as u64, n, cols] {
            out.write_all(&word.to_le_bytes())?;
        }
        for v in &self.wavefunction {
            out.write_all(&v.to_le_bytes())?;
        }
        out.flush()?;
        Ok(())
    }
}

/// A value no eigenvalue of `ham` lies below.
///
/// 1D Hamiltonians are tridiagonal and bounded by Sturm-sequence bisection.
/// In 2D, `H = H₁ ⊗ I + I ⊗ H₁ + (λ/h)·D` with `D` a nonnegative diagonal,
/// so for `λ ≥ 0` the lowest eigenvalue is at least twice the 1D one on the
/// same axis grid. Never weaker than the Gershgorin bound.
pub fn certified_lower_bound(ham: &GridHamiltonian) -> Result<f64> {
    let (gershgorin, _) = ham.matrix.gershgorin_bounds();
    let bound = match ham.grid.dim() {
        1 => {
            let (diag, off) = ham
                .matrix
                .tridiagonal_parts()
                .ok_or_else(|| Error::Matrix("1D Hamiltonian is not tridiagonal".into()))?;
            sturm::smallest_eigenvalue_bracket(&diag, &off, STURM_TOL)?.0
        }
        _ => {
            let axis = hamiltonian_1d(&ham.grid.axis(), &ham.params)?;
            2.0 * certified_lower_bound(&axis)?
        }
    };
    Ok(bound.max(gershgorin))
}

/// Inverse-iteration shift: the certified bound minus a margin that keeps
/// the shifted system well away from singular.
pub fn eigensolver_shift(ham: &GridHamiltonian) -> Result<f64> {
    let bound = certified_lower_bound(ham)?;
    let (lo, hi) = ham.matrix.gershgorin_bounds();
    Ok(bound - 0.05 * bound.abs() - 1e-6 * (hi - lo))
}

pub fn ground_state(ham: &GridHamiltonian, tol: f64) -> Result<OracleResult> {
    ground_state_with(ham, &OracleOptions::with_tol(tol))
}

pub fn ground_state_with(ham: &GridHamiltonian, opts: &OracleOptions) -> Result<OracleResult> {
    let shift = eigensolver_shift(ham)?;
    let eigen_opts = EigenOptions {
        tol: opts.tol,
        max_iter: opts.max_iter,
        execution: opts.execution,
        ..EigenOptions::default()
    };
    let pair = lowest_eigenpair_with(&ham.matrix, shift, &eigen_opts)?;
    let scale = 1.0 / ham.grid.cell_volume().sqrt();
    Ok(OracleResult {
        energy: pair.eigenvalue,
        wavefunction: pair.eigenvector.iter().map(|v| v * scale).collect(),
        residual_norm: pair.residual_norm,
        grid: ham.grid,
        params: ham.params,
        shift,
        iterations: pair.iterations,
        inner_iterations: pair.inner_iterations,
    })
}

/// Builds the Hamiltonian for `grid` and solves for its ground state.
pub fn solve_grid(
    grid: &Grid,
    params: &PhysicalParams,
    opts: &OracleOptions,
) -> Result<OracleResult> {
    ground_state_with(&hamiltonian(grid, params)?, opts)
}

/// `E(λ) − E(0)` on the same 2D grid.
pub fn correlation_shift(params: &PhysicalParams, grid: &Grid, tol: f64) -> Result<f64> {
    if grid.dim() != 2 {
        return Err(Error::Grid("the correlation shift needs a 2D grid".into()));
    }
    if params.lambda() == 0.0 {
        return Ok(0.0);
    }
    let opts = OracleOptions::with_tol(tol);
    let correlated = solve_grid(grid, params, &opts)?;
    let uncorrelated = solve_grid(grid, &params.with_lambda(0.0)?, &opts)?;
    Ok(correlated.energy - uncorrelated.energy)
}
