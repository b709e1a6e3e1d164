//! Semiclassical spectral toolkit for one-dimensional eigenvalue problems.
//!
//! The crate computes Bohr-Sommerfeld eigenvalue approximations for the
//! Schrodinger equation and the self-adjoint Zakharov-Shabat system, both
//! written as traceless 2x2 first-order systems `eps w' = B(x; lambda) w`,
//! and cross-validates them against direct spectral solvers.
//!
//! Module layout:
//!
//! * [`specfun`] - special functions: the turning-point pair `zeta`/`t`,
//!   Airy functions, parabolic cylinder functions `U`/`V`, and the weight
//!   functions used to control weighted remainders.
//! * [`problem`] - problem definitions: potentials with derivatives from
//!   forward-mode differentiation, coefficient matrices, Riemann invariants,
//!   hypothesis validation, and the Zakharov-Shabat coordinate reduction.
//! * [`action`] - turning points, the signed square-root coordinate, action
//!   integrals and the derived parameters `b(lambda)`, `phi(lambda)`.
//! * [`langer`] - the Langer change of variable `y = g(x; lambda)` with
//!   derivatives to third order, the perturbation kernel `Q(y)`, and the
//!   gauge-matrix assembly with conjugation residuals.
//! * [`quantize`] - Bohr-Sommerfeld spectra and quantization residuals.
//! * [`reference`] - ground-truth solvers: renormalized shooting with a
//!   Wronskian eigencondition, a finite-difference matrix oracle, and the
//!   perturbed Weber comparison solver.

pub mod action;
pub mod langer;
pub mod problem;
pub mod quantize;
pub mod reference;
pub mod specfun;
pub mod util;

pub use problem::{ProblemKind, ProblemSpec};
pub use quantize::{SpectrumEntry, SpectrumResult, SpectrumSource};
