use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The function values at the bracket endpoints do not differ in sign.
    #[error("no sign change on [{lo}, {hi}] (f(lo) = {f_lo}, f(hi) = {f_hi})")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("failed to converge: {0}")]
    Convergence(String),

    /// Conjugate gradient met a search direction of nonpositive curvature.
    #[error("matrix is not positive definite: {0}")]
    Indefinite(String),

    /// The eigensolver shift is not strictly below the spectrum.
    #[error("shift {shift} is not below the spectrum: {reason}")]
    Shift { shift: f64, reason: String },

    /// A sparse matrix violates its structural invariants.
    #[error("malformed matrix: {0}")]
    Matrix(String),

    #[error("invalid grid: {0}")]
    Grid(String),

    /// Failure while solving for one point of a sweep.
    #[error("at x = {x}: {source}")]
    AtPoint {
        x: f64,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of an iterative method as opposed to bad input.
    pub fn is_convergence_failure(&self) -> bool {
        match self {
            Error::Bracket { .. }
            | Error::Convergence(_)
            | Error::Indefinite(_)
            | Error::Shift { .. } => true,
            Error::AtPoint { source, .. } => source.is_convergence_failure(),
            _ => false,
        }
    }
}

pub(crate) fn ensure_finite(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {value}")))
    }
}
