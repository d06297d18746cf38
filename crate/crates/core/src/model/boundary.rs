//! Boundary conditions of the ansatz at the delta-function lines, for
//! `alpha = lambda = 1` in atomic units.

use std::f64::consts::FRAC_1_SQRT_2;

use super::ansatz::{eval_ansatz, AnsatzWavefunction};
use crate::error::{ensure_finite, Error, Result};

pub const DEFAULT_FD_STEP: f64 = 1e-6;

/// Algebraic residuals `(r₁, r₂)` of the two surviving boundary conditions.
///
/// `r₁ = (k/√2)·B + B + A·exp(−√2·k·x)` comes from the repulsive line
/// `x = y`; `r₂ = A·(1 − k/√2) + B` from the attractive lines. With
/// `B = (k/√2 − 1)·A`, `r₂` vanishes and `r₁ = −A·secular(k, x)`.
pub fn boundary_residuals(w: &AnsatzWavefunction, x: f64) -> Result<(f64, f64)> {
    ensure_finite("x", x)?;
    if !(x > 0.0) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    let (a, b, k) = (w.amp_separable(), w.amp_correlation(), w.k());
    let half = k * FRAC_1_SQRT_2;
    let r1 = half * b + b + a * (-std::f64::consts::SQRT_2 * k * x).exp();
    let r2 = a * (1.0 - half) + b;
    Ok((r1, r2))
}

/// Residuals of the four jump conditions, each `−½·[∂ψ] ± ψ` on its line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JumpResiduals {
    /// Jump of `∂ψ/∂x` across `x = y`, at `(y, y)`: `−½[∂ₓψ] + ψ(y, y)`.
    pub diagonal_in_x: f64,
    /// Jump of `∂ψ/∂y` across `y = x`, at `(x, x)`: `−½[∂ᵧψ] + ψ(x, x)`.
    pub diagonal_in_y: f64,
    /// Jump of `∂ψ/∂x` across `x = 0`, at `(0, y)`: `−½[∂ₓψ] − ψ(0, y)`.
    pub well_in_x: f64,
    /// Jump of `∂ψ/∂y` across `y = 0`, at `(x, 0)`: `−½[∂ᵧψ] − ψ(x, 0)`.
    pub well_in_y: f64,
}

impl JumpResiduals {
    pub fn to_array(&self) -> [f64; 4] {
        [
            self.diagonal_in_x,
            self.diagonal_in_y,
            self.well_in_x,
            self.well_in_y,
        ]
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().fold(0.0f64, |m, r| m.max(r.abs()))
    }
}

/// Jump conditions estimated from one-sided finite differences of the
/// ansatz with step `fd_step` on each side of the kink line.
///
/// The conditions along the line `x = y` are evaluated at `(y, y)` and
/// `(x, x)`; the ones along the axes at `(0, y)` and `(x, 0)`. Both
/// coordinates must be nonzero and at least twice `fd_step` in magnitude so
/// the stencils do not straddle a second kink.
pub fn jump_residuals(
    w: &AnsatzWavefunction,
    x: f64,
    y: f64,
    fd_step: f64,
) -> Result<JumpResiduals> {
    ensure_finite("x", x)?;
    ensure_finite("y", y)?;
    ensure_finite("fd_step", fd_step)?;
    if !(fd_step > 0.0) {
        return Err(Error::Domain(format!(
            "fd_step must be positive, got {fd_step}"
        )));
    }
    if x == 0.0 || y == 0.0 {
        return Err(Error::Domain(format!(
            "jump conditions need x != 0 and y != 0, got ({x}, {y})"
        )));
    }
    if 2.0 * fd_step > x.abs().min(y.abs()) {
        return Err(Error::Domain(format!(
            "fd_step {fd_step} too large for the point ({x}, {y})"
        )));
    }
    let psi = |px: f64, py: f64| eval_ansatz(w, px, py);
    let h = fd_step;
    // Right minus left one-sided slope of g at c.
    let jump = |g: &dyn Fn(f64) -> Result<f64>, c: f64| -> Result<f64> {
        Ok((g(c + h)? - 2.0 * g(c)? + g(c - h)?) / h)
    };

    let diagonal_in_x = -0.5 * jump(&|s| psi(s, y), y)? + psi(y, y)?;
    let diagonal_in_y = -0.5 * jump(&|s| psi(x, s), x)? + psi(x, x)?;
    let well_in_x = -0.5 * jump(&|s| psi(s, y), 0.0)? - psi(0.0, y)?;
    let well_in_y = -0.5 * jump(&|s| psi(x, s), 0.0)? - psi(x, 0.0)?;
    Ok(JumpResiduals {
        diagonal_in_x,
        diagonal_in_y,
        well_in_x,
        well_in_y,
    })
}
