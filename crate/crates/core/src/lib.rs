//! Numerical and exact constructions for D2-automorphic Lie algebras on
//! complex tori.
//!
//! The crate is layered bottom-up:
//!
//! * [`theta`]: theta functions with characteristics and their identity suite.
//! * [`elliptic`]: lattices, uniformizers of the curve
//!   `λ_i² − λ_j² = r_j − r_i`, Weierstrass and Jacobi functions, modular
//!   lambda and its inversion.
//! * [`liealg`]: 2×2 and 4×4 complex matrices, `sl(2)` and `so(3,1)` bases,
//!   the Heisenberg group `He₂` and its representations.
//! * [`intertwiner`]: the theta intertwiner `Ω` and its adjoint action.
//! * [`generators`]: normal-form triples, current generators, the Uglov and
//!   Holod realizations.
//! * [`qring`]: exact arithmetic in `ℂ[λ₁,λ₂,λ₃]/I` and exact bracket tables.
//! * [`zcr`]: the Landau–Lifshitz Lax pair at `n = 3` and its zero-curvature
//!   residual.
//! * [`report`] and [`suites`]: verification reports consumed by the CLI.

pub mod elliptic;
pub mod error;
pub mod generators;
pub mod intertwiner;
pub mod liealg;
mod linsolve;
pub mod qring;
pub mod report;
pub mod sampling;
pub mod suites;
pub mod theta;
pub mod zcr;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Shorthand for `Complex64::new`.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The imaginary unit.
pub const I: Complex64 = Complex64::new(0.0, 1.0);
