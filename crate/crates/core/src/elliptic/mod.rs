//! Elliptic functions on `ℂ/(ℤ+ℤτ)` and the curve `λ_i² − λ_j² = r_j − r_i`.

mod curve;
mod functions;
mod jacobi;
mod lattice;
mod modular;
mod weierstrass;

pub use curve::{CurveParams, CurvePoint};
pub use functions::{isotypical_project, two_point_split, xi_p, xi_p_span_residual, SplitFit};
pub use jacobi::{jacobi_modulus, jacobi_scaling, jacobi_sn_cn_dn, jacobi_w};
pub use lattice::{Lattice, TorusPoint, TORUS_EQ_TOL};
pub use modular::{elliptic_k, modular_lambda, tau_from_r};
pub use weierstrass::{
    half_period_values, invariants_g2_g3, wp, wp_de_residual, wp_prime, wp_second, wp_zero, wp_zero_is_double,
    DOUBLE_ZERO_TOL,
};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::theta::{theta_jacobi, ModularParam};

/// Magnitude of `θ₁(2z)` below which `z` is treated as a point of `½Λ`.
pub const POLE_THRESHOLD: f64 = 1e-13;

/// `μ_i(z) = θ_{i+1}(2z) / (θ_{i+1}(0)·θ₁(2z))`.
pub fn mu(i: usize, z: Complex64, tau: &ModularParam) -> Result<Complex64> {
    if !(1..=3).contains(&i) {
        return Err(Error::Precondition(format!("mu index {i} out of range 1..3")));
    }
    let den = theta_jacobi(1, 2.0 * z, tau)?;
    if den.norm() < POLE_THRESHOLD {
        return Err(Error::Pole { what: "mu", z });
    }
    Ok(theta_jacobi(i + 1, 2.0 * z, tau)? / (tau.null(i + 1) * den))
}

/// All three `μ_i(z)` sharing one evaluation of `θ₁(2z)`.
pub fn mu_all(z: Complex64, tau: &ModularParam) -> Result<[Complex64; 3]> {
    let den = theta_jacobi(1, 2.0 * z, tau)?;
    if den.norm() < POLE_THRESHOLD {
        return Err(Error::Pole { what: "mu", z });
    }
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for (i, o) in out.iter_mut().enumerate() {
        *o = theta_jacobi(i + 2, 2.0 * z, tau)? / (tau.null(i + 2) * den);
    }
    Ok(out)
}

/// Differences `(R₁₃, R₁₂, R₂₃)` realised by the `μ_i` themselves:
/// `θ₃²/(θ₄²θ₂²)`, `θ₄²/(θ₂²θ₃²)`, `θ₂²/(θ₃²θ₄²)`.
pub fn natural_differences(tau: &ModularParam) -> [Complex64; 3] {
    let t2 = tau.null(2).powu(2);
    let t3 = tau.null(3).powu(2);
    let t4 = tau.null(4).powu(2);
    [t3 / (t4 * t2), t4 / (t2 * t3), t2 / (t3 * t4)]
}
