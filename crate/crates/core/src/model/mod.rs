//! The analytic two-electron model.
//!
//! Each electron sits in an attractive delta well of strength `alpha` at the
//! origin and the pair repels through `lambda · δ(x − y)`. The trial state
//! is the sum of a separable product and a correlation term,
//!
//! ```text
//! ψ(x, y) = A·exp(−k(|x| + |y|)/√2) + B·exp(−k|x − y|/√2)
//! ```
//!
//! and the delta-function jump conditions at `alpha = lambda = 1` reduce to a
//! 2×2 homogeneous system in `(A, B)` whose determinant is the secular
//! function `1 − k²/2 − exp(−√2·k·x)`.

mod ansatz;
mod boundary;
mod params;
mod secular;

pub use ansatz::{box_norm, eval_ansatz, eval_correlation, eval_separable, AnsatzWavefunction};
pub use boundary::{boundary_residuals, jump_residuals, JumpResiduals, DEFAULT_FD_STEP};
pub use params::PhysicalParams;
pub use secular::{
    amplitude_ratio, energy_from_k, energy_from_k_general, secular, secular_derivative,
    secular_general, solve_k, sweep, ModelSolution, DEFAULT_MODEL_TOL, K_SEARCH_MIN,
};
