//! Lowest eigenpair by shifted inverse iteration.

use super::cg::{self, CgOptions};
use super::sparse::{dot, norm2, Execution, SymmetricSparseMatrix};
use crate::error::{Error, Result};

pub const DEFAULT_EIGEN_TOL: f64 = 1e-8;
pub const DEFAULT_EIGEN_MAX_ITER: usize = 2000;

#[derive(Debug, Clone)]
pub struct EigenOptions {
    /// Stop once `‖M v − θ v‖₂ ≤ tol` for the Rayleigh quotient `θ`.
    pub tol: f64,
    pub max_iter: usize,
    /// Iteration budget for each inner conjugate-gradient solve.
    pub inner_max_iter: usize,
    pub execution: Execution,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions {
            tol: DEFAULT_EIGEN_TOL,
            max_iter: DEFAULT_EIGEN_MAX_ITER,
            inner_max_iter: 100_000,
            execution: Execution::Sequential,
        }
    }
}

#[derive(Debug, Clone)]
pub struct EigenResult {
    pub eigenvalue: f64,
    /// Unit Euclidean norm.
    pub eigenvector: Vec<f64>,
    /// `‖M v − λ v‖₂`, recomputed from the returned pair.
    pub residual_norm: f64,
    /// Outer (inverse iteration) steps.
    pub iterations: usize,
    /// Conjugate-gradient steps summed over all inner solves.
    pub inner_iterations: usize,
}

/// Smallest eigenpair of `m` by inverse iteration on `m − shift·I`.
///
/// `shift` must lie strictly below the spectrum so the shifted matrix is
/// positive definite. Starts from the normalized all-ones vector.
pub fn lowest_eigenpair(
    m: &SymmetricSparseMatrix,
    shift: f64,
    tol: f64,
    max_iter: usize,
) -> Result<EigenResult> {
    let opts = EigenOptions {
        tol,
        max_iter,
        ..EigenOptions::default()
    };
    lowest_eigenpair_with(m, shift, &opts)
}

pub fn lowest_eigenpair_with(
    m: &SymmetricSparseMatrix,
    shift: f64,
    opts: &EigenOptions,
) -> Result<EigenResult> {
    if !shift.is_finite() {
        return Err(Error::Domain(format!("shift must be finite, got {shift}")));
    }
    if !(opts.tol > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {}",
            opts.tol
        )));
    }
    let n = m.dim();
    let shifted = m.shifted(shift);
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut mv = vec![0.0; n];
    let mut rhs_guess = vec![0.0; n];
    let mut inner_iterations = 0;

    for iteration in 0..=opts.max_iter {
        let (theta, residual) = rayleigh_residual(m, &v, &mut mv, opts.execution)?;
        if theta <= shift {
            return Err(shift_error(shift, theta));
        }
        if residual <= opts.tol {
            return finish(m, v, shift, iteration, inner_iterations, opts);
        }
        if iteration == opts.max_iter {
            return Err(Error::Convergence(format!(
                "inverse iteration reached {} steps with residual {residual:.3e} (target {:.3e})",
                opts.max_iter, opts.tol
            )));
        }

        // Warm start from v/(θ − σ); its relative residual is ‖r‖/(θ − σ), and
        // each inner solve must beat that by a fixed factor to make progress.
        let gap = theta - shift;
        for (g, &vi) in rhs_guess.iter_mut().zip(&v) {
            *g = vi / gap;
        }
        let inner_tol = (0.1 * residual / gap).clamp(1e-12, 0.1);
        let cg_opts = CgOptions {
            tol: inner_tol,
            max_iter: opts.inner_max_iter,
            execution: opts.execution,
        };
        let solved = cg::solve(&shifted, &v, Some(&rhs_guess), &cg_opts).map_err(|e| match e {
            Error::Indefinite(reason) => Error::Shift { shift, reason },
            other => other,
        })?;
        inner_iterations += solved.iterations;
        let mut z = solved.solution;
        let z_norm = norm2(&z);
        if !(z_norm > 0.0) || !z_norm.is_finite() {
            return Err(Error::Convergence(format!(
                "inner solve returned a degenerate vector at step {iteration}"
            )));
        }
        // Fix the overall sign so the iterate stays comparable between steps.
        let sign = if z.iter().sum::<f64>() < 0.0 {
            -1.0
        } else {
            1.0
        };
        for zi in z.iter_mut() {
            *zi *= sign / z_norm;
        }
        v = z;
    }
    unreachable!("loop returns on its last iteration")
}

fn finish(
    m: &SymmetricSparseMatrix,
    mut v: Vec<f64>,
    shift: f64,
    iterations: usize,
    inner_iterations: usize,
    opts: &EigenOptions,
) -> Result<EigenResult> {
    let norm = norm2(&v);
    for vi in v.iter_mut() {
        *vi /= norm;
    }
    let mut mv = vec![0.0; v.len()];
    let (eigenvalue, residual_norm) = rayleigh_residual(m, &v, &mut mv, opts.execution)?;
    if eigenvalue <= shift {
        return Err(shift_error(shift, eigenvalue));
    }
    if residual_norm > opts.tol {
        return Err(Error::Convergence(format!(
            "recomputed residual {residual_norm:.3e} exceeds {:.3e}",
            opts.tol
        )));
    }
    Ok(EigenResult {
        eigenvalue,
        eigenvector: v,
        residual_norm,
        iterations,
        inner_iterations,
    })
}

/// Rayleigh quotient and residual norm of a unit vector.
fn rayleigh_residual(
    m: &SymmetricSparseMatrix,
    v: &[f64],
    mv: &mut [f64],
    exec: Execution,
) -> Result<(f64, f64)> {
    m.matvec_into(v, mv, exec)?;
    let theta = dot(v, mv);
    let residual = v
        .iter()
        .zip(mv.iter())
        .map(|(&vi, &mvi)| {
            let d = mvi - theta * vi;
            d * d
        })
        .sum::<f64>()
        .sqrt();
    Ok((theta, residual))
}

fn shift_error(shift: f64, theta: f64) -> Error {
    Error::Shift {
        shift,
        reason: format!("Rayleigh quotient {theta} is not above it"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_lowest() {
        let m = SymmetricSparseMatrix::from_diagonal(&[-1.0, 0.0, 3.0]).unwrap();
        let r = lowest_eigenpair(&m, -2.0, 1e-10, 500).unwrap();
        assert!((r.eigenvalue + 1.0).abs() < 1e-12);
        assert!((r.eigenvector[0].abs() - 1.0).abs() < 1e-10);
        assert!(r.residual_norm <= 1e-10);
    }

    #[test]
    fn unit_norm() {
        let m = SymmetricSparseMatrix::tridiagonal(&[2.0; 6], &[-1.0; 5]).unwrap();
        let r = lowest_eigenpair(&m, -0.5, 1e-10, 500).unwrap();
        assert!((norm2(&r.eigenvector) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn shift_above_spectrum_is_rejected() {
        let m = SymmetricSparseMatrix::from_diagonal(&[1.0, 2.0, 3.0]).unwrap();
        let err = lowest_eigenpair(&m, 5.0, 1e-10, 100).unwrap_err();
        assert!(matches!(err, Error::Shift { .. }), "{err}");
    }

    #[test]
    fn shift_inside_spectrum_is_rejected() {
        let m = SymmetricSparseMatrix::from_diagonal(&[1.0, 2.0, 3.0]).unwrap();
        let err = lowest_eigenpair(&m, 1.5, 1e-10, 100).unwrap_err();
        assert!(matches!(err, Error::Shift { .. }), "{err}");
    }

    #[test]
    fn iteration_budget() {
        let m = SymmetricSparseMatrix::from_diagonal(&[1.0, 1.001, 3.0]).unwrap();
        let err = lowest_eigenpair(&m, -100.0, 1e-12, 3).unwrap_err();
        assert!(matches!(err, Error::Convergence(_)));
    }
}
