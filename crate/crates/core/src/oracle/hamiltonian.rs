//! Finite-difference Hamiltonians with delta potentials lumped onto nodes.
//!
//! A delta of strength `s` on a grid line becomes `s/h` on the nodes of that
//! line, which keeps `h·Σ f(node)` equal to the continuum line integral.

use super::grid::Grid;
use crate::error::{Error, Result};
use crate::model::PhysicalParams;
use crate::numerics::SymmetricSparseMatrix;

/// A discretized Hamiltonian with the grid and parameters it was built from.
#[derive(Debug, Clone)]
pub struct GridHamiltonian {
    pub matrix: SymmetricSparseMatrix,
    pub grid: Grid,
    pub params: PhysicalParams,
}

/// One particle in the well `−α·δ(x)`: `−(ħ²/2m)·∂² − α·δ(x)`.
pub fn hamiltonian_1d(grid: &Grid, params: &PhysicalParams) -> Result<GridHamiltonian> {
    if grid.dim() != 1 {
        return Err(Error::Grid(format!(
            "expected a 1D grid, got dimension {}",
            grid.dim()
        )));
    }
    let n = grid.n();
    let h = grid.spacing();
    let hop = params.kinetic_scale() / (h * h);
    let mut diagonal = vec![2.0 * hop; n];
    diagonal[grid.center_index()] -= params.alpha() / h;
    let off = vec![-hop; n - 1];
    Ok(GridHamiltonian {
        matrix: SymmetricSparseMatrix::tridiagonal(&diagonal, &off)?,
        grid: *grid,
        params: *params,
    })
}

/// Two particles: `−(ħ²/2m)(∂ₓ² + ∂ᵧ²) − α·δ(x) − α·δ(y) + λ·δ(x − y)`.
///
/// Node `(i, j)` (coordinate `i` for the first particle) has row index
/// `i·n + j`.
pub fn hamiltonian_2d(grid: &Grid, params: &PhysicalParams) -> Result<GridHamiltonian> {
    if grid.dim() != 2 {
        return Err(Error::Grid(format!(
            "expected a 2D grid, got dimension {}",
            grid.dim()
        )));
    }
    let n = grid.n();
    let h = grid.spacing();
    let hop = params.kinetic_scale() / (h * h);
    let well = params.alpha() / h;
    let repulsion = params.lambda() / h;
    let c = grid.center_index();

    let dim = n * n;
    let mut row_offsets = Vec::with_capacity(dim + 1);
    let mut col_indices = Vec::with_capacity(5 * dim);
    let mut values = Vec::with_capacity(5 * dim);
    row_offsets.push(0);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            let mut diag = 4.0 * hop;
            if i == c {
                diag -= well;
            }
            if j == c {
                diag -= well;
            }
            if i == j {
                diag += repulsion;
            }
            let mut push = |col: usize, v: f64| {
                col_indices.push(col);
                values.push(v);
            };
            if i > 0 {
                push(row - n, -hop);
            }
            if j > 0 {
                push(row - 1, -hop);
            }
            push(row, diag);
            if j + 1 < n {
                push(row + 1, -hop);
            }
            if i + 1 < n {
                push(row + n, -hop);
            }
            row_offsets.push(col_indices.len());
        }
    }
    Ok(GridHamiltonian {
        matrix: SymmetricSparseMatrix::new(dim, row_offsets, col_indices, values)?,
        grid: *grid,
        params: *params,
    })
}

/// Builds the Hamiltonian matching the grid's dimension.
pub fn hamiltonian(grid: &Grid, params: &PhysicalParams) -> Result<GridHamiltonian> {
    match grid.dim() {
        1 => hamiltonian_1d(grid, params),
        _ => hamiltonian_2d(grid, params),
    }
}
