//! Compressed sparse row storage for real symmetric matrices.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// How row-wise kernels are scheduled.
///
/// Every row of a product is computed by the same sequential loop in both
/// modes, so results are bit-identical; `Parallel` only spreads rows over the
/// rayon pool.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Execution {
    #[default]
    Sequential,
    Parallel,
}

// Rows per rayon task.
const PAR_ROW_CHUNK: usize = 4096;

/// A real symmetric matrix in compressed sparse row form.
///
/// Both triangles are stored. Construction checks that column indices are in
/// range and strictly increasing within each row and that every entry `(i, j)`
/// has a partner `(j, i)` with the same value to machine precision.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricSparseMatrix {
    dim: usize,
    row_offsets: Vec<usize>,
    col_indices: Vec<usize>,
    values: Vec<f64>,
}

impl SymmetricSparseMatrix {
    pub fn new(
        dim: usize,
        row_offsets: Vec<usize>,
        col_indices: Vec<usize>,
        values: Vec<f64>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Matrix("dimension must be positive".into()));
        }
        if row_offsets.len() != dim + 1 {
            return Err(Error::Matrix(format!(
                "row_offsets has length {}, expected {}",
                row_offsets.len(),
                dim + 1
            )));
        }
        if row_offsets[0] != 0 || row_offsets.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Matrix(
                "row_offsets must start at 0 and be nondecreasing".into(),
            ));
        }
        let nnz = row_offsets[dim];
        if col_indices.len() != nnz || values.len() != nnz {
            return Err(Error::Matrix(format!(
                "expected {nnz} entries, got {} column indices and {} values",
                col_indices.len(),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Matrix(format!("non-finite entry {v}")));
        }
        for row in 0..dim {
            let cols = &col_indices[row_offsets[row]..row_offsets[row + 1]];
            if cols.iter().any(|&c| c >= dim) {
                return Err(Error::Matrix(format!(
                    "row {row} has a column index out of range"
                )));
            }
            if cols.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Matrix(format!(
                    "row {row} column indices are not strictly increasing"
                )));
            }
        }
        let m = SymmetricSparseMatrix {
            dim,
            row_offsets,
            col_indices,
            values,
        };
        m.check_symmetry()?;
        Ok(m)
    }

    /// Builds from a dense row-major square matrix, dropping exact zeros.
    pub fn from_dense(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        let mut row_offsets = Vec::with_capacity(dim + 1);
        let mut col_indices = Vec::new();
        let mut values = Vec::new();
        row_offsets.push(0);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Matrix(format!(
                    "row {i} has length {}, expected {dim}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v != 0.0 {
                    col_indices.push(j);
                    values.push(v);
                }
            }
            row_offsets.push(col_indices.len());
        }
        Self::new(dim, row_offsets, col_indices, values)
    }

    pub fn from_diagonal(diagonal: &[f64]) -> Result<Self> {
        let dim = diagonal.len();
        Self::new(
            dim,
            (0..=dim).collect(),
            (0..dim).collect(),
            diagonal.to_vec(),
        )
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::from_diagonal(&vec![1.0; dim])
    }

    /// Symmetric tridiagonal matrix from its diagonal and off-diagonal.
    pub fn tridiagonal(diagonal: &[f64], off_diagonal: &[f64]) -> Result<Self> {
        let dim = diagonal.len();
        if dim == 0 || off_diagonal.len() + 1 != dim {
            return Err(Error::Matrix(format!(
                "tridiagonal needs off-diagonal of length {} for diagonal of length {dim}",
                dim.saturating_sub(1)
            )));
        }
        let mut row_offsets = Vec::with_capacity(dim + 1);
        let mut col_indices = Vec::with_capacity(3 * dim);
        let mut values = Vec::with_capacity(3 * dim);
        row_offsets.push(0);
        for i in 0..dim {
            if i > 0 {
                col_indices.push(i - 1);
                values.push(off_diagonal[i - 1]);
            }
            col_indices.push(i);
            values.push(diagonal[i]);
            if i + 1 < dim {
                col_indices.push(i + 1);
                values.push(off_diagonal[i]);
            }
            row_offsets.push(col_indices.len());
        }
        Self::new(dim, row_offsets, col_indices, values)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.row_offsets
    }

    pub fn col_indices(&self) -> &[usize] {
        &self.col_indices
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Entry `(i, j)`, zero when not stored.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i >= self.dim || j >= self.dim {
            return 0.0;
        }
        let range = self.row_offsets[i]..self.row_offsets[i + 1];
        match self.col_indices[range.clone()].binary_search(&j) {
            Ok(pos) => self.values[range.start + pos],
            Err(_) => 0.0,
        }
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    /// Diagonal and first off-diagonal when the matrix is tridiagonal.
    pub fn tridiagonal_parts(&self) -> Option<(Vec<f64>, Vec<f64>)> {
        let banded = (0..self.dim).all(|i| {
            self.col_indices[self.row_offsets[i]..self.row_offsets[i + 1]]
                .iter()
                .all(|&j| j + 1 >= i && j <= i + 1)
        });
        if !banded {
            return None;
        }
        let off = (1..self.dim).map(|i| self.get(i - 1, i)).collect();
        Some((self.diagonal(), off))
    }

    /// Interval `[lo, hi]` containing the whole spectrum, from Gershgorin discs.
    pub fn gershgorin_bounds(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.dim {
            let mut center = 0.0;
            let mut radius = 0.0;
            for k in self.row_offsets[i]..self.row_offsets[i + 1] {
                if self.col_indices[k] == i {
                    center = self.values[k];
                } else {
                    radius += self.values[k].abs();
                }
            }
            lo = lo.min(center - radius);
            hi = hi.max(center + radius);
        }
        (lo, hi)
    }

    /// `M v`.
    pub fn matvec(&self, v: &[f64]) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.dim];
        self.matvec_into(v, &mut out, Execution::Sequential)?;
        Ok(out)
    }

    /// Writes `M v` into `out`.
    pub fn matvec_into(&self, v: &[f64], out: &mut [f64], exec: Execution) -> Result<()> {
        if v.len() != self.dim || out.len() != self.dim {
            return Err(Error::Domain(format!(
                "matvec dimension mismatch: matrix {}, input {}, output {}",
                self.dim,
                v.len(),
                out.len()
            )));
        }
        let row = |i: usize| -> f64 {
            let mut acc = 0.0;
            for k in self.row_offsets[i]..self.row_offsets[i + 1] {
                acc += self.values[k] * v[self.col_indices[k]];
            }
            acc
        };
        match exec {
            Execution::Sequential => {
                for (i, o) in out.iter_mut().enumerate() {
                    *o = row(i);
                }
            }
            Execution::Parallel => {
                out.par_chunks_mut(PAR_ROW_CHUNK)
                    .enumerate()
                    .for_each(|(c, chunk)| {
                        let base = c * PAR_ROW_CHUNK;
                        for (r, o) in chunk.iter_mut().enumerate() {
                            *o = row(base + r);
                        }
                    });
            }
        }
        Ok(())
    }

    /// `M - shift * I`, with explicit diagonal entries added where missing.
    pub fn shifted(&self, shift: f64) -> Self {
        let mut row_offsets = Vec::with_capacity(self.dim + 1);
        let mut col_indices = Vec::with_capacity(self.nnz() + self.dim);
        let mut values = Vec::with_capacity(self.nnz() + self.dim);
        row_offsets.push(0);
        for i in 0..self.dim {
            let mut placed = false;
            for k in self.row_offsets[i]..self.row_offsets[i + 1] {
                let j = self.col_indices[k];
                if !placed && j >= i {
                    if j == i {
                        col_indices.push(i);
                        values.push(self.values[k] - shift);
                        placed = true;
                        continue;
                    }
                    col_indices.push(i);
                    values.push(-shift);
                    placed = true;
                }
                col_indices.push(j);
                values.push(self.values[k]);
            }
            if !placed {
                col_indices.push(i);
                values.push(-shift);
            }
            row_offsets.push(col_indices.len());
        }
        SymmetricSparseMatrix {
            dim: self.dim,
            row_offsets,
            col_indices,
            values,
        }
    }

    fn check_symmetry(&self) -> Result<()> {
        for i in 0..self.dim {
            for k in self.row_offsets[i]..self.row_offsets[i + 1] {
                let j = self.col_indices[k];
                if j == i {
                    continue;
                }
                let range = self.row_offsets[j]..self.row_offsets[j + 1];
                let Ok(pos) = self.col_indices[range.clone()].binary_search(&i) else {
                    return Err(Error::Matrix(format!(
                        "entry ({i}, {j}) has no transposed partner"
                    )));
                };
                let (a, b) = (self.values[k], self.values[range.start + pos]);
                if (a - b).abs() > 4.0 * f64::EPSILON * a.abs().max(b.abs()) {
                    return Err(Error::Matrix(format!(
                        "entries ({i}, {j}) = {a} and ({j}, {i}) = {b} differ"
                    )));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}
