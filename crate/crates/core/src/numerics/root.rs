//! Bisection on a sign-changing bracket.

use crate::error::{ensure_finite, Error, Result};

/// An interval `[lo, hi]` with `lo < hi`.
///
/// The sign-change half of the invariant depends on the target function and
/// is checked by [`find_root_bracketed`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    lo: f64,
    hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        ensure_finite("bracket lower end", lo)?;
        ensure_finite("bracket upper end", hi)?;
        if lo < hi {
            Ok(Bracket { lo, hi })
        } else {
            Err(Error::Domain(format!("empty bracket [{lo}, {hi}]")))
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub root: f64,
    /// `|f(root)|`.
    pub residual: f64,
    /// Final bracket containing the sign change; a single point when an
    /// exact zero was hit.
    pub bracket: Bracket,
    pub iterations: usize,
}

/// Halves `bracket` until it is at most `tol` wide and returns its midpoint.
///
/// `f` is only ever evaluated inside the initial bracket. An exact zero at
/// an endpoint or midpoint ends the search early. When the bracket shrinks
/// to adjacent floating-point numbers before reaching `tol` the search stops
/// there, since no further halving is possible.
pub fn find_root_bracketed<F>(
    mut f: F,
    bracket: Bracket,
    tol: f64,
    max_iter: usize,
) -> Result<RootResult>
where
    F: FnMut(f64) -> f64,
{
    if !(tol > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if !f_lo.is_finite() || !f_hi.is_finite() {
        return Err(Error::Domain(format!(
            "function is not finite at the bracket ends (f({lo}) = {f_lo}, f({hi}) = {f_hi})"
        )));
    }
    let exact = |root: f64, iterations: usize| -> Result<RootResult> {
        Ok(RootResult {
            root,
            residual: 0.0,
            bracket: Bracket { lo: root, hi: root },
            iterations,
        })
    };
    if f_lo == 0.0 {
        return exact(lo, 0);
    }
    if f_hi == 0.0 {
        return exact(hi, 0);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracket { lo, hi, f_lo, f_hi });
    }

    let mut iterations = 0;
    while hi - lo > tol {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        if iterations == max_iter {
            return Err(Error::Convergence(format!(
                "bisection exhausted {max_iter} iterations with bracket [{lo}, {hi}]"
            )));
        }
        iterations += 1;
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return exact(mid, iterations);
        }
        if !f_mid.is_finite() {
            return Err(Error::Domain(format!("function is not finite at {mid}")));
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let root = lo + 0.5 * (hi - lo);
    Ok(RootResult {
        root,
        residual: f(root).abs(),
        bracket: Bracket { lo, hi },
        iterations,
    })
}
