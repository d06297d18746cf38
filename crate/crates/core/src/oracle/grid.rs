use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MIN_GRID_POINTS: usize = 31;

/// Uniform grid of `n` nodes per axis on `[−L, L]`, in one or two dimensions.
///
/// `n` is odd so the middle node sits exactly at the origin and, in 2D, the
/// diagonal `x = y` passes through nodes `(i, i)`. All `n` nodes per axis are
/// unknowns; the wavefunction is pinned to zero one spacing beyond each end.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    dim: usize,
    n: usize,
    half_length: f64,
}

impl Grid {
    pub fn new(dim: usize, n: usize, half_length: f64) -> Result<Self> {
        if dim != 1 && dim != 2 {
            return Err(Error::Grid(format!("dimension must be 1 or 2, got {dim}")));
        }
        if n < MIN_GRID_POINTS {
            return Err(Error::Grid(format!(
                "need at least {MIN_GRID_POINTS} points per axis, got {n}"
            )));
        }
        if n.is_multiple_of(2) {
            return Err(Error::Grid(format!(
                "points per axis must be odd to put a node at 0, got {n}"
            )));
        }
        if !(half_length.is_finite() && half_length > 0.0) {
            return Err(Error::Grid(format!(
                "half length must be positive, got {half_length}"
            )));
        }
        Ok(Grid {
            dim,
            n,
            half_length,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Points per axis.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn half_length(&self) -> f64 {
        self.half_length
    }

    /// `h = 2L/(n − 1)`.
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_length / (self.n - 1) as f64
    }

    pub fn center_index(&self) -> usize {
        (self.n - 1) / 2
    }

    /// Coordinate of axis node `i`; exactly zero at the center.
    pub fn coordinate(&self, i: usize) -> f64 {
        let offset = i as isize - self.center_index() as isize;
        offset as f64 * self.spacing()
    }

    /// Total number of unknowns, `n^dim`.
    pub fn unknowns(&self) -> usize {
        self.n.pow(self.dim as u32)
    }

    /// Quadrature weight of one node, `h^dim`.
    pub fn cell_volume(&self) -> f64 {
        self.spacing().powi(self.dim as i32)
    }

    /// The one-dimensional grid along either axis.
    pub fn axis(&self) -> Grid {
        Grid { dim: 1, ..*self }
    }
}
