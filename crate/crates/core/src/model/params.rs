use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};

/// Physical constants and coupling strengths of the two-electron Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    hbar: f64,
    mass: f64,
    alpha: f64,
    lambda: f64,
}

impl PhysicalParams {
    /// `hbar`, `mass` and `alpha` must be positive, `lambda` nonnegative.
    pub fn new(hbar: f64, mass: f64, alpha: f64, lambda: f64) -> Result<Self> {
        for (name, v) in [
            ("hbar", hbar),
            ("mass", mass),
            ("alpha", alpha),
            ("lambda", lambda),
        ] {
            ensure_finite(name, v)?;
        }
        if !(hbar > 0.0 && mass > 0.0) {
            return Err(Error::Domain(format!(
                "hbar and mass must be positive, got {hbar} and {mass}"
            )));
        }
        if !(alpha > 0.0) {
            return Err(Error::Domain(format!(
                "alpha must be positive, got {alpha}"
            )));
        }
        if !(lambda >= 0.0) {
            return Err(Error::Domain(format!(
                "lambda must be nonnegative, got {lambda}"
            )));
        }
        Ok(PhysicalParams {
            hbar,
            mass,
            alpha,
            lambda,
        })
    }

    /// Atomic units with unit well and repulsion strengths.
    pub fn atomic() -> Self {
        PhysicalParams {
            hbar: 1.0,
            mass: 1.0,
            alpha: 1.0,
            lambda: 1.0,
        }
    }

    /// Atomic units (`hbar = mass = 1`) with the given couplings.
    pub fn atomic_with(alpha: f64, lambda: f64) -> Result<Self> {
        Self::new(1.0, 1.0, alpha, lambda)
    }

    pub fn with_lambda(self, lambda: f64) -> Result<Self> {
        Self::new(self.hbar, self.mass, self.alpha, lambda)
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Kinetic prefactor `ħ²/2m`.
    pub fn kinetic_scale(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.mass)
    }
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self::atomic()
    }
}
