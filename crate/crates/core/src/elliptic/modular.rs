use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::theta::ModularParam;
use crate::I;

const AGM_MAX_ITER: usize = 64;
const ROUND_TRIP_TOL: f64 = 1e-10;

/// `λ(τ) = θ₂(0|τ)⁴/θ₃(0|τ)⁴`.
pub fn modular_lambda(tau: &ModularParam) -> Complex64 {
    (tau.null(2) / tau.null(3)).powu(4)
}

fn agm(a0: Complex64, b0: Complex64) -> Result<Complex64> {
    let (mut a, mut b) = (a0, b0);
    for _ in 0..AGM_MAX_ITER {
        if (a - b).norm() <= 1e-16 * a.norm() {
            return Ok(a);
        }
        let an = (a + b) / 2.0;
        let mut bn = (a * b).sqrt();
        // keep the geometric mean on the side of the arithmetic one
        if (an - bn).norm() > (an + bn).norm() {
            bn = -bn;
        }
        a = an;
        b = bn;
    }
    if (a - b).norm() <= 1e-14 * a.norm() {
        Ok(a)
    } else {
        Err(Error::NonConvergence { what: "AGM", iterations: AGM_MAX_ITER })
    }
}

/// Complete elliptic integral of the first kind `K(m)`, parameter `m = k²`.
pub fn elliptic_k(m: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    Ok(PI / (2.0 * agm(one, (one - m).sqrt())?))
}

/// `τ` with `λ(τ) = (r₂−r₃)/(r₁−r₃)`.
pub fn tau_from_r(r1: Complex64, r2: Complex64, r3: Complex64) -> Result<ModularParam> {
    let eps = 1e-14 * (r1.norm() + r2.norm() + r3.norm()).max(1.0);
    if (r1 - r2).norm() < eps || (r2 - r3).norm() < eps || (r1 - r3).norm() < eps {
        return Err(Error::Degenerate(format!("coincident r values ({r1}, {r2}, {r3})")));
    }
    let m = (r2 - r3) / (r1 - r3);
    if m.norm() < 1e-14 || (m - 1.0).norm() < 1e-14 {
        return Err(Error::Degenerate(format!("cross-ratio m = {m} is 0 or 1")));
    }
    let one = Complex64::new(1.0, 0.0);
    let tau = I * elliptic_k(one - m)? / elliptic_k(m)?;
    let mut p = ModularParam::new(tau)?;
    // polish with Newton on λ(τ) − m, using λ' = iπ λ θ₄⁴
    for _ in 0..4 {
        let lam = modular_lambda(&p);
        let err = lam - m;
        if err.norm() < 1e-15 {
            break;
        }
        let d = I * PI * lam * p.null(4).powu(4);
        p = ModularParam::new(p.tau() - err / d)?;
    }
    let residual = (modular_lambda(&p) - m).norm();
    if residual < ROUND_TRIP_TOL {
        Ok(p)
    } else {
        Err(Error::NonConvergence { what: "modular lambda inversion", iterations: AGM_MAX_ITER })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use proptest::prelude::*;

    #[test]
    fn lambda_at_i_is_half() {
        assert!((modular_lambda(&ModularParam::i()) - 0.5).norm() < 1e-14);
    }

    #[test]
    fn lambda_on_imaginary_axis_is_monotone() {
        let mut prev = 1.0;
        for k in 1..20 {
            let l = modular_lambda(&ModularParam::new(c64(0.0, 0.5 + 0.2 * k as f64)).unwrap());
            assert!(l.im.abs() < 1e-14 && l.re > 0.0 && l.re < prev);
            prev = l.re;
        }
    }

    #[test]
    fn lambda_has_period_two() {
        let a = ModularParam::new(c64(0.3, 0.9)).unwrap();
        let b = ModularParam::new(c64(2.3, 0.9)).unwrap();
        assert!((modular_lambda(&a) - modular_lambda(&b)).norm() < 1e-12);
    }

    #[test]
    fn k_of_half() {
        // K(1/2) = Γ(1/4)² / (4√π)
        let expect = 3.625_609_908_221_908_f64.powi(2) / (4.0 * PI.sqrt());
        assert!((elliptic_k(c64(0.5, 0.0)).unwrap() - expect).norm() < 1e-14);
    }

    #[test]
    fn tau_for_symmetric_triple() {
        let p = tau_from_r(c64(2.0, 0.0), c64(1.0, 0.0), c64(0.0, 0.0)).unwrap();
        assert!((p.tau() - I).norm() < 1e-12);
        assert!((modular_lambda(&p) - 0.5).norm() < 1e-10);
    }

    #[test]
    fn coincident_triple_is_degenerate() {
        let e = tau_from_r(c64(0.0, 0.0), c64(1.0, 0.0), c64(1.0, 0.0)).unwrap_err();
        assert!(matches!(e, Error::Degenerate(_)));
    }

    proptest! {
        #[test]
        fn round_trip_real_triples(a in -3.0f64..3.0, d1 in 0.05f64..4.0, d2 in 0.05f64..4.0) {
            let (r3, r2) = (a, a + d1);
            let r1 = r2 + d2;
            let p = tau_from_r(c64(r1, 0.0), c64(r2, 0.0), c64(r3, 0.0)).unwrap();
            prop_assert!(p.tau().im > 0.0);
            let m = (r2 - r3) / (r1 - r3);
            prop_assert!((modular_lambda(&p) - m).norm() < 1e-10);
        }
    }
}
