//! Bound states of two electrons, each held by its own attractive delta
//! well, that repel each other through a contact interaction.
//!
//! The crate has three layers:
//!
//! * [`model`] evaluates the analytic trial wavefunction, its boundary
//!   conditions and the secular equation fixing the decay constant `k`.
//! * [`numerics`] holds the small numerical kernels everything else needs:
//!   bracketed root finding, a CSR symmetric matrix, conjugate gradient and
//!   shifted inverse iteration for the lowest eigenpair.
//! * [`oracle`] discretizes the full two-particle Schrödinger equation on a
//!   grid and solves for its ground state, independently of the analytic
//!   model.
//!
//! Everything is in atomic units unless a function says otherwise.

// Validation guards are written `!(v > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod model;
pub mod numerics;
pub mod oracle;

pub use error::{Error, Result};
