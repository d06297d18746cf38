//! Sturm-sequence eigenvalue counting for symmetric tridiagonal matrices.

use crate::error::{Error, Result};

/// Number of eigenvalues strictly below `sigma`.
///
/// Counts negative pivots of the LDLᵀ factorization of `T − σI`
/// (Sylvester's law of inertia).
pub fn count_below(diagonal: &[f64], off_diagonal: &[f64], sigma: f64) -> usize {
    let scale = diagonal
        .iter()
        .chain(off_diagonal)
        .fold(0.0f64, |acc, v| acc.max(v.abs()));
    let pivmin = f64::MIN_POSITIVE.max(scale * scale * f64::MIN_POSITIVE) + f64::MIN_POSITIVE;
    let mut count = 0;
    let mut q = 1.0;
    for (i, &d) in diagonal.iter().enumerate() {
        let coupling = if i == 0 {
            0.0
        } else {
            off_diagonal[i - 1] * off_diagonal[i - 1] / q
        };
        q = d - sigma - coupling;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Brackets the smallest eigenvalue: `lo` has no eigenvalue below it, `hi`
/// has at least one, and `hi − lo ≤ tol · max(1, |lo|)`.
pub fn smallest_eigenvalue_bracket(
    diagonal: &[f64],
    off_diagonal: &[f64],
    tol: f64,
) -> Result<(f64, f64)> {
    let n = diagonal.len();
    if n == 0 || off_diagonal.len() + 1 != n {
        return Err(Error::Domain("tridiagonal dimensions do not match".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 {
            off_diagonal[i - 1].abs()
        } else {
            0.0
        };
        let right = if i + 1 < n {
            off_diagonal[i].abs()
        } else {
            0.0
        };
        lo = lo.min(diagonal[i] - left - right);
        hi = hi.max(diagonal[i] + left + right);
    }
    // Gershgorin ends can be eigenvalues themselves; widen slightly.
    let pad = f64::EPSILON * (lo.abs() + hi.abs()).max(1.0) * 4.0;
    lo -= pad;
    hi += pad;
    while hi - lo > tol * lo.abs().max(1.0) {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_below(diagonal, off_diagonal, mid) == 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}
