//! PT-symmetric extensions with a two-dimensional deficiency space.
//!
//! The deficiency space is identified with C^2, where the Clifford algebra
//! generated by parity `P` and `R = sgn(x)` acts through Pauli matrices.
//! The crate provides
//!
//! * [`clifford`]: Pauli decomposition, the involutions `P_xi`, the
//!   C-operators `exp(chi iRP_xi) P_xi` and the metric they induce;
//! * [`pt_krein`]: PT-symmetry, Krein self-adjointness and C-symmetry tests,
//!   and solvers recovering `xi` and `chi` from a matrix;
//! * [`extension`]: the boundary maps of the zero-range model, the
//!   `beta`-parametrization `T = beta0 I + beta1 C` and the classification of
//!   extensions with nonnegative spectrum;
//! * [`scattering`]: the scattering matrix `S(z)`, its inversion and the
//!   characteristic-property checks;
//! * [`cli`]: the `ptsym` command-line front end.

pub mod cli;
pub mod clifford;
pub mod error;
pub mod extension;
pub mod matrix;
pub mod pt_krein;
pub mod scattering;

pub use error::{Error, Result};
pub use matrix::{ComplexMatrix2, C64};

/// Default absolute tolerance for operator-norm residuals.
pub const DEFAULT_TOL: f64 = 1e-10;
