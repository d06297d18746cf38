use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

use serde::{Deserialize, Serialize};

use super::params::PhysicalParams;
use crate::error::{ensure_finite, Error, Result};
use crate::numerics::{find_root_bracketed, Bracket};

pub const DEFAULT_MODEL_TOL: f64 = 1e-12;

/// Lower end of the root search; keeps the trivial root `k = 0` out.
pub const K_SEARCH_MIN: f64 = 1e-6;

const BISECTION_MAX_ITER: usize = 200;
const NEWTON_POLISH_STEPS: usize = 5;

/// One solved point of the model: decay constant, energy and `B/A`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelSolution {
    /// Separation parameter (bohr).
    pub x: f64,
    /// Decay constant (1/bohr), in `(0, √2)`.
    pub k: f64,
    /// `−k²/2` (hartree).
    pub energy: f64,
    /// `B/A = k/√2 − 1`.
    pub amp_ratio: f64,
}

fn check_x(x: f64) -> Result<f64> {
    ensure_finite("x", x)?;
    if x > 0.0 {
        Ok(x)
    } else {
        Err(Error::Domain(format!(
            "separation parameter x must be positive, got {x} (at x = 0 every k solves the boundary system)"
        )))
    }
}

fn check_nonnegative_k(k: f64) -> Result<f64> {
    ensure_finite("k", k)?;
    if k >= 0.0 {
        Ok(k)
    } else {
        Err(Error::Domain(format!("k must be nonnegative, got {k}")))
    }
}

/// Secular function `1 − k²/2 − exp(−√2·k·x)` in atomic units at
/// `alpha = lambda = 1`. Its nontrivial zero fixes `k`.
pub fn secular(k: f64, x: f64) -> Result<f64> {
    check_nonnegative_k(k)?;
    check_x(x)?;
    Ok(secular_unchecked(k, x))
}

fn secular_unchecked(k: f64, x: f64) -> f64 {
    1.0 - 0.5 * k * k - (-SQRT_2 * k * x).exp()
}

/// `∂/∂k` of [`secular`]: `−k + √2·x·exp(−√2·k·x)`.
pub fn secular_derivative(k: f64, x: f64) -> Result<f64> {
    check_nonnegative_k(k)?;
    check_x(x)?;
    Ok(derivative_unchecked(k, x))
}

fn derivative_unchecked(k: f64, x: f64) -> f64 {
    -k + SQRT_2 * x * (-SQRT_2 * k * x).exp()
}

/// Determinant condition with `ħ` and `m` kept explicit:
/// `m/ħ² − (ħ²/m)·k²/2 − (m/ħ²)·exp(−√2·k·x)`.
///
/// Reduces to [`secular`] in atomic units. Only the atomic-units form is
/// solved; this one is for evaluation.
pub fn secular_general(k: f64, x: f64, params: &PhysicalParams) -> Result<f64> {
    check_nonnegative_k(k)?;
    check_x(x)?;
    let ratio = params.mass() / (params.hbar() * params.hbar());
    Ok(ratio - 0.5 * k * k / ratio - ratio * (-SQRT_2 * k * x).exp())
}

/// `E = −k²/2` (atomic units).
pub fn energy_from_k(k: f64) -> Result<f64> {
    check_nonnegative_k(k)?;
    Ok(-0.5 * k * k)
}

/// `E = −ħ²k²/(2m)`.
pub fn energy_from_k_general(k: f64, params: &PhysicalParams) -> Result<f64> {
    check_nonnegative_k(k)?;
    Ok(-params.kinetic_scale() * k * k)
}

/// `B/A = k/√2 − 1`, from the boundary condition across the wells.
pub fn amplitude_ratio(k: f64) -> Result<f64> {
    ensure_finite("k", k)?;
    if !(k > 0.0) {
        return Err(Error::Domain(format!("k must be positive, got {k}")));
    }
    Ok(k * FRAC_1_SQRT_2 - 1.0)
}

/// Nontrivial root of the secular equation for separation `x`.
///
/// Bisects on `[K_SEARCH_MIN, √2]` to width `tol`, then polishes with up to
/// five Newton steps that must stay inside the final bracket and must not
/// increase `|secular|`.
pub fn solve_k(x: f64, tol: f64) -> Result<ModelSolution> {
    check_x(x)?;
    ensure_finite("tol", tol)?;
    if !(tol > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let bracket = Bracket::new(K_SEARCH_MIN, SQRT_2)?;
    let found = find_root_bracketed(
        |k| secular_unchecked(k, x),
        bracket,
        tol,
        BISECTION_MAX_ITER,
    )
    .map_err(|e| match e {
        Error::Bracket { lo, hi, f_lo, f_hi } => Error::Convergence(format!(
            "secular function has no sign change on [{lo}, {hi}] (values {f_lo:e}, {f_hi:e})"
        )),
        other => other,
    })?;

    let (lo, hi) = (found.bracket.lo(), found.bracket.hi());
    let mut k = found.root;
    let mut f = secular_unchecked(k, x);
    for _ in 0..NEWTON_POLISH_STEPS {
        if f == 0.0 {
            break;
        }
        let slope = derivative_unchecked(k, x);
        if slope == 0.0 {
            break;
        }
        let next = k - f / slope;
        if !(lo..=hi).contains(&next) {
            break;
        }
        let f_next = secular_unchecked(next, x);
        if f_next.abs() > f.abs() {
            break;
        }
        let stalled = next == k;
        k = next;
        f = f_next;
        if stalled {
            break;
        }
    }

    // Below ~1e-16 the residual is at rounding level and tol may be unreachable.
    if f.abs() > tol.max(4.0 * f64::EPSILON) {
        return Err(Error::Convergence(format!(
            "secular residual {:.3e} above tolerance {tol:.3e} at k = {k}",
            f.abs()
        )));
    }
    if k <= K_SEARCH_MIN {
        return Err(Error::Convergence(format!(
            "root k = {k} collapsed onto the trivial root"
        )));
    }
    Ok(ModelSolution {
        x,
        k,
        energy: -0.5 * k * k,
        amp_ratio: k * FRAC_1_SQRT_2 - 1.0,
    })
}

/// [`solve_k`] for every `x`, in input order.
pub fn sweep(x_values: &[f64], tol: f64) -> Result<Vec<ModelSolution>> {
    x_values
        .iter()
        .map(|&x| {
            solve_k(x, tol).map_err(|e| Error::AtPoint {
                x,
                source: Box::new(e),
            })
        })
        .collect()
}
