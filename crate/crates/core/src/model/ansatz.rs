use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{ensure_finite, Error, Result};

/// Trial wavefunction `A·exp(−k(|x|+|y|)/√2) + B·exp(−k|x−y|/√2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnsatzWavefunction {
    amp_separable: f64,
    amp_correlation: f64,
    k: f64,
}

impl AnsatzWavefunction {
    pub fn new(amp_separable: f64, amp_correlation: f64, k: f64) -> Result<Self> {
        ensure_finite("separable amplitude", amp_separable)?;
        ensure_finite("correlation amplitude", amp_correlation)?;
        check_k(k)?;
        if amp_separable == 0.0 && amp_correlation == 0.0 {
            return Err(Error::Domain("both amplitudes are zero".into()));
        }
        Ok(AnsatzWavefunction {
            amp_separable,
            amp_correlation,
            k,
        })
    }

    /// `A` (product term).
    pub fn amp_separable(&self) -> f64 {
        self.amp_separable
    }

    /// `B` (correlation term).
    pub fn amp_correlation(&self) -> f64 {
        self.amp_correlation
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        eval_ansatz(self, x, y)
    }
}

fn check_k(k: f64) -> Result<f64> {
    ensure_finite("k", k)?;
    if k > 0.0 {
        Ok(k)
    } else {
        Err(Error::Domain(format!(
            "decay constant k must be positive, got {k}"
        )))
    }
}

fn check_point(x: f64, y: f64) -> Result<()> {
    ensure_finite("x", x)?;
    ensure_finite("y", y)?;
    Ok(())
}

/// Separable product `amp·exp(−k(|x|+|y|)/√2)`.
pub fn eval_separable(k: f64, amp: f64, x: f64, y: f64) -> Result<f64> {
    check_k(k)?;
    ensure_finite("amplitude", amp)?;
    check_point(x, y)?;
    Ok(amp * (-k * (x.abs() + y.abs()) * FRAC_1_SQRT_2).exp())
}

/// Correlation term `amp·exp(−k|x−y|/√2)`.
pub fn eval_correlation(k: f64, amp: f64, x: f64, y: f64) -> Result<f64> {
    check_k(k)?;
    ensure_finite("amplitude", amp)?;
    check_point(x, y)?;
    Ok(amp * (-k * (x - y).abs() * FRAC_1_SQRT_2).exp())
}

pub fn eval_ansatz(w: &AnsatzWavefunction, x: f64, y: f64) -> Result<f64> {
    Ok(eval_separable(w.k, w.amp_separable, x, y)?
        + eval_correlation(w.k, w.amp_correlation, x, y)?)
}

/// `∫∫ ψ²` over the square `[−L, L]²` by composite Simpson quadrature.
///
/// The correlation term does not decay along the diagonal, so the ansatz has
/// no finite norm on the whole plane; only a box norm is meaningful. Panels
/// are split at the kinks (`x = 0`, `y = 0`, `y = x`) so every piece is
/// smooth. `panels` is the number of Simpson panels per smooth segment.
pub fn box_norm(w: &AnsatzWavefunction, half_length: f64, panels: usize) -> Result<f64> {
    ensure_finite("half_length", half_length)?;
    if !(half_length > 0.0) {
        return Err(Error::Domain(format!(
            "half_length must be positive, got {half_length}"
        )));
    }
    if panels == 0 {
        return Err(Error::Domain("need at least one quadrature panel".into()));
    }
    let l = half_length;
    let density = |x: f64, y: f64| {
        let psi = w.amp_separable * (-w.k * (x.abs() + y.abs()) * FRAC_1_SQRT_2).exp()
            + w.amp_correlation * (-w.k * (x - y).abs() * FRAC_1_SQRT_2).exp();
        psi * psi
    };
    let inner = |x: f64| {
        let mut breaks = [-l, 0.0, x, l];
        breaks.sort_by(f64::total_cmp);
        breaks
            .windows(2)
            .map(|s| simpson(|y| density(x, y), s[0], s[1], panels))
            .sum::<f64>()
    };
    Ok(simpson(inner, -l, 0.0, panels) + simpson(inner, 0.0, l, panels))
}

fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    if b <= a {
        return 0.0;
    }
    let n = 2 * panels;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += weight * f(a + i as f64 * h);
    }
    acc * h / 3.0
}
