//! Jacobi `sn`, `cn`, `dn` as theta quotients.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::theta::{theta_jacobi, ModularParam};

/// Modulus `k = θ₂(0)²/θ₃(0)²`.
pub fn jacobi_modulus(tau: &ModularParam) -> Complex64 {
    (tau.null(2) / tau.null(3)).powu(2)
}

/// The factor `1/(πθ₃²)` mapping the Jacobi argument `u` to the theta
/// argument; it makes `sn′(0) = 1`.
pub fn jacobi_scaling(tau: &ModularParam) -> Complex64 {
    1.0 / (PI * tau.null(3).powu(2))
}

/// `(sn u, cn u, dn u)`.
pub fn jacobi_sn_cn_dn(u: Complex64, tau: &ModularParam) -> Result<[Complex64; 3]> {
    let zeta = u * jacobi_scaling(tau);
    let t4 = theta_jacobi(4, zeta, tau)?;
    if t4.norm() < 1e-300 {
        return Err(Error::Pole { what: "jacobi sn/cn/dn", z: u });
    }
    let (n2, n3, n4) = (tau.null(2), tau.null(3), tau.null(4));
    Ok([
        n3 / n2 * theta_jacobi(1, zeta, tau)? / t4,
        n4 / n2 * theta_jacobi(2, zeta, tau)? / t4,
        n4 / n3 * theta_jacobi(3, zeta, tau)? / t4,
    ])
}

/// `w₁ = 1/sn`, `w₂ = dn/sn`, `w₃ = cn/sn`.
pub fn jacobi_w(i: usize, u: Complex64, tau: &ModularParam) -> Result<Complex64> {
    if !(1..=3).contains(&i) {
        return Err(Error::Precondition(format!("w index {i} out of range 1..3")));
    }
    let zeta = u * jacobi_scaling(tau);
    let t1 = theta_jacobi(1, zeta, tau)?;
    if t1.norm() < 1e-13 {
        return Err(Error::Pole { what: "jacobi w", z: u });
    }
    let (n2, n3, n4) = (tau.null(2), tau.null(3), tau.null(4));
    Ok(match i {
        1 => n2 / n3 * theta_jacobi(4, zeta, tau)? / t1,
        2 => n2 * n4 / (n3 * n3) * theta_jacobi(3, zeta, tau)? / t1,
        _ => n4 / n3 * theta_jacobi(2, zeta, tau)? / t1,
    })
}
