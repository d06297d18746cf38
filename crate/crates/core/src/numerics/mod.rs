//! Numerical kernels: bracketed root finding, symmetric CSR matrices,
//! conjugate gradient and the lowest eigenpair by shifted inverse iteration.

pub mod cg;
pub mod eigen;
pub mod root;
pub mod sparse;
pub mod sturm;

pub use cg::{conjugate_gradient, CgOptions, CgSolution};
pub use eigen::{lowest_eigenpair, lowest_eigenpair_with, EigenOptions, EigenResult};
pub use root::{find_root_bracketed, Bracket, RootResult};
pub use sparse::{Execution, SymmetricSparseMatrix};
