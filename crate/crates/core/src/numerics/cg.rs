//! Unpreconditioned conjugate gradient for symmetric positive definite systems.

use super::sparse::{dot, norm2, Execution, SymmetricSparseMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct CgOptions {
    /// Relative tolerance: stop once `‖b − M z‖ ≤ tol · ‖b‖`.
    pub tol: f64,
    pub max_iter: usize,
    pub execution: Execution,
}

impl Default for CgOptions {
    fn default() -> Self {
        CgOptions {
            tol: 1e-10,
            max_iter: 100_000,
            execution: Execution::Sequential,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CgSolution {
    pub solution: Vec<f64>,
    pub iterations: usize,
    /// True residual `‖b − M z‖₂` recomputed from the returned solution.
    pub residual_norm: f64,
    /// Recursively updated residual norms, starting with the initial one.
    pub residual_history: Vec<f64>,
}

impl CgSolution {
    /// Whether the residual at every step is no larger than the residual
    /// `window` steps earlier.
    pub fn nonincreasing_over(&self, window: usize) -> bool {
        self.residual_history
            .windows(window + 1)
            .all(|w| w[window] <= w[0])
    }
}

// Recursive residuals drift from true ones; allow a few restarts from the
// current iterate when they disagree.
const MAX_RESTARTS: usize = 3;

/// Solves `M z = b` with a zero initial guess.
pub fn conjugate_gradient(
    m: &SymmetricSparseMatrix,
    b: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<Vec<f64>> {
    let opts = CgOptions {
        tol,
        max_iter,
        ..CgOptions::default()
    };
    solve(m, b, None, &opts).map(|s| s.solution)
}

/// Solves `M z = b`, optionally starting from `guess`.
///
/// Fails with [`Error::Indefinite`] as soon as a search direction has
/// nonpositive curvature `pᵀ M p ≤ 0`.
pub fn solve(
    m: &SymmetricSparseMatrix,
    b: &[f64],
    guess: Option<&[f64]>,
    opts: &CgOptions,
) -> Result<CgSolution> {
    let n = m.dim();
    if b.len() != n {
        return Err(Error::Domain(format!(
            "right-hand side has length {}, expected {n}",
            b.len()
        )));
    }
    if !(opts.tol > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {}",
            opts.tol
        )));
    }
    let b_norm = norm2(b);
    if b_norm == 0.0 {
        return Ok(CgSolution {
            solution: vec![0.0; n],
            iterations: 0,
            residual_norm: 0.0,
            residual_history: vec![0.0],
        });
    }
    let target = opts.tol * b_norm;

    let mut z = match guess {
        Some(g) if g.len() == n => g.to_vec(),
        Some(g) => {
            return Err(Error::Domain(format!(
                "initial guess has length {}, expected {n}",
                g.len()
            )))
        }
        None => vec![0.0; n],
    };
    let mut r = vec![0.0; n];
    let mut p = vec![0.0; n];
    let mut mp = vec![0.0; n];
    let mut history = Vec::new();
    let mut iterations = 0;

    for _restart in 0..=MAX_RESTARTS {
        true_residual(m, b, &z, &mut r, opts.execution)?;
        let mut rr = dot(&r, &r);
        if history.is_empty() {
            history.push(rr.sqrt());
        }
        if rr.sqrt() <= target {
            return Ok(CgSolution {
                solution: z,
                iterations,
                residual_norm: rr.sqrt(),
                residual_history: history,
            });
        }
        p.copy_from_slice(&r);
        while rr.sqrt() > target {
            if iterations == opts.max_iter {
                return Err(Error::Convergence(format!(
                    "conjugate gradient reached {} iterations with relative residual {:.3e}",
                    opts.max_iter,
                    rr.sqrt() / b_norm
                )));
            }
            iterations += 1;
            m.matvec_into(&p, &mut mp, opts.execution)?;
            let curvature = dot(&p, &mp);
            if !(curvature > 0.0) {
                return Err(Error::Indefinite(format!(
                    "search direction curvature {curvature:.3e} at iteration {iterations}"
                )));
            }
            let step = rr / curvature;
            for i in 0..n {
                z[i] += step * p[i];
                r[i] -= step * mp[i];
            }
            let rr_next = dot(&r, &r);
            history.push(rr_next.sqrt());
            let beta = rr_next / rr;
            rr = rr_next;
            for i in 0..n {
                p[i] = r[i] + beta * p[i];
            }
        }
        let mut check = vec![0.0; n];
        true_residual(m, b, &z, &mut check, opts.execution)?;
        let residual_norm = norm2(&check);
        if residual_norm <= target {
            return Ok(CgSolution {
                solution: z,
                iterations,
                residual_norm,
                residual_history: history,
            });
        }
    }
    Err(Error::Convergence(format!(
        "conjugate gradient residual drifted above {:.3e} after {MAX_RESTARTS} restarts",
        opts.tol
    )))
}

fn true_residual(
    m: &SymmetricSparseMatrix,
    b: &[f64],
    z: &[f64],
    out: &mut [f64],
    exec: Execution,
) -> Result<()> {
    m.matvec_into(z, out, exec)?;
    for (o, &bi) in out.iter_mut().zip(b) {
        *o = bi - *o;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_returns_rhs() {
        let m = SymmetricSparseMatrix::identity(5).unwrap();
        let b = vec![1.0, -2.0, 3.5, 0.0, 9.0];
        let z = conjugate_gradient(&m, &b, 1e-12, 10).unwrap();
        for (zi, bi) in z.iter().zip(&b) {
            assert!((zi - bi).abs() < 1e-14);
        }
    }

    #[test]
    fn diagonal_solve() {
        let m = SymmetricSparseMatrix::from_diagonal(&[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        let z = conjugate_gradient(&m, &[1.0; 5], 1e-12, 50).unwrap();
        for (i, zi) in z.iter().enumerate() {
            assert!((zi - 1.0 / (i as f64 + 1.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn detects_indefinite() {
        let m = SymmetricSparseMatrix::from_diagonal(&[1.0, -1.0]).unwrap();
        let err = conjugate_gradient(&m, &[0.0, 1.0], 1e-12, 50).unwrap_err();
        assert!(matches!(err, Error::Indefinite(_)));
    }

    #[test]
    fn iteration_budget() {
        let n = 200;
        let m = SymmetricSparseMatrix::tridiagonal(&vec![2.0; n], &vec![-1.0; n - 1]).unwrap();
        let err = conjugate_gradient(&m, &vec![1.0; n], 1e-12, 3).unwrap_err();
        assert!(matches!(err, Error::Convergence(_)));
    }

    #[test]
    fn zero_rhs() {
        let m = SymmetricSparseMatrix::identity(3).unwrap();
        assert_eq!(
            conjugate_gradient(&m, &[0.0; 3], 1e-12, 10).unwrap(),
            vec![0.0; 3]
        );
    }

    #[test]
    fn warm_start_converges_immediately() {
        let m = SymmetricSparseMatrix::from_diagonal(&[2.0, 4.0]).unwrap();
        let opts = CgOptions {
            tol: 1e-12,
            ..CgOptions::default()
        };
        let s = solve(&m, &[2.0, 4.0], Some(&[1.0, 1.0]), &opts).unwrap();
        assert_eq!(s.iterations, 0);
    }
}
