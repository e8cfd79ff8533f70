//! Weierstrass `℘` from the second logarithmic derivative of `θ₁`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::lattice::{Lattice, TorusPoint};
use crate::error::{Error, Result};
use crate::theta::{theta_deriv, ModularParam};

/// Distance to the lattice below which `℘` reports a pole.
const POLE_RADIUS: f64 = 1e-10;
/// Tolerance for `z₀ ≡ −z₀`; a double root only pins `z₀` to about `√ε`.
pub const DOUBLE_ZERO_TOL: f64 = 1e-6;
const GRID: usize = 40;
const GRID_EXCLUSION: f64 = 1e-2;
const ZERO_MAX_ITER: usize = 60;

struct UnitEval {
    t1: Complex64,
    d1: Complex64,
    d2: Complex64,
    d3: Complex64,
}

fn unit_eval(z: Complex64, p: &ModularParam) -> Result<UnitEval> {
    Ok(UnitEval {
        t1: theta_deriv(1, z, p, 0)?,
        d1: theta_deriv(1, z, p, 1)?,
        d2: theta_deriv(1, z, p, 2)?,
        d3: theta_deriv(1, z, p, 3)?,
    })
}

/// Laurent constant making `℘(z) − 1/z²` vanish at the origin.
fn unit_constant(p: &ModularParam) -> Result<Complex64> {
    let z0 = Complex64::new(0.0, 0.0);
    Ok(theta_deriv(1, z0, p, 3)? / (3.0 * theta_deriv(1, z0, p, 1)?))
}

/// Maps `z` to the centred representative for the unit lattice of `lattice`.
fn to_unit(z: Complex64, lattice: &Lattice) -> Result<(Complex64, ModularParam)> {
    let unit = Lattice::unit(lattice.tau())?;
    let w = unit.reduce_centered(z / lattice.scale());
    if unit.distance(w) < POLE_RADIUS {
        return Err(Error::Pole { what: "wp", z });
    }
    Ok((w, ModularParam::new(lattice.tau())?))
}

/// `℘_Λ(z)`.
pub fn wp(z: Complex64, lattice: &Lattice) -> Result<Complex64> {
    let (w, p) = to_unit(z, lattice)?;
    let e = unit_eval(w, &p)?;
    let l1 = e.d1 / e.t1;
    let unit = -(e.d2 / e.t1 - l1 * l1) + unit_constant(&p)?;
    Ok(unit / lattice.scale().powu(2))
}

/// `℘′_Λ(z)`.
pub fn wp_prime(z: Complex64, lattice: &Lattice) -> Result<Complex64> {
    let (w, p) = to_unit(z, lattice)?;
    let e = unit_eval(w, &p)?;
    let l1 = e.d1 / e.t1;
    let unit = -(e.d3 / e.t1 - 3.0 * e.d2 * e.d1 / (e.t1 * e.t1) + 2.0 * l1 * l1 * l1);
    Ok(unit / lattice.scale().powu(3))
}

/// `℘″ = 6℘² − g₂/2`.
pub fn wp_second(z: Complex64, lattice: &Lattice) -> Result<Complex64> {
    let (g2, _) = invariants_g2_g3(lattice)?;
    Ok(6.0 * wp(z, lattice)?.powu(2) - g2 / 2.0)
}

/// `(e₁, e₂, e₃) = (℘(ω₁), ℘(ω₁+ω₃), ℘(ω₃))` for half periods `ω₁ = scale/2`,
/// `ω₃ = scale·τ/2`.
pub fn half_period_values(lattice: &Lattice) -> Result<[Complex64; 3]> {
    let p = ModularParam::new(lattice.tau())?;
    let t = |j| p.null(j).powu(4);
    let k = PI * PI / 3.0 / lattice.scale().powu(2);
    Ok([k * (t(3) + t(4)), k * (t(2) - t(4)), -k * (t(2) + t(3))])
}

/// Modular invariants `(g₂, g₃)` of the lattice.
pub fn invariants_g2_g3(lattice: &Lattice) -> Result<(Complex64, Complex64)> {
    let unit = Lattice::unit(lattice.tau())?;
    let [e1, e2, e3] = half_period_values(&unit)?;
    let g2 = 2.0 * (e1 * e1 + e2 * e2 + e3 * e3);
    let g3 = 4.0 * e1 * e2 * e3;
    let s = lattice.scale();
    Ok((g2 / s.powu(4), g3 / s.powu(6)))
}

/// `|℘′² − 4℘³ + g₂℘ + g₃|` normalised by `max(1, |℘′|², 4|℘|³)`.
pub fn wp_de_residual(z: Complex64, lattice: &Lattice) -> Result<f64> {
    let (g2, g3) = invariants_g2_g3(lattice)?;
    let w = wp(z, lattice)?;
    let d = wp_prime(z, lattice)?;
    let scale = 1f64.max(d.norm_sqr()).max(4.0 * w.norm().powi(3));
    Ok((d * d - 4.0 * w * w * w + g2 * w + g3).norm() / scale)
}

/// The zeros `±z₀` of `℘_Λ`, located by a grid scan and refined by the
/// multiplicity-robust Newton step `z ← z − ℘℘′/(℘′² − ℘℘″)`.
pub fn wp_zero(lattice: &Lattice) -> Result<(TorusPoint, TorusPoint)> {
    let unit = Lattice::unit(lattice.tau())?;
    let (g2, _) = invariants_g2_g3(&unit)?;
    let mut best = (f64::INFINITY, Complex64::new(0.0, 0.0));
    for a in 0..GRID {
        for b in 0..GRID {
            let z = Complex64::new((a as f64 + 0.5) / GRID as f64, 0.0) + unit.tau() * ((b as f64 + 0.5) / GRID as f64);
            if unit.distance(z) < GRID_EXCLUSION {
                continue;
            }
            let v = wp(z, &unit)?.norm();
            if v < best.0 {
                best = (v, z);
            }
        }
    }
    let mut z = best.1;
    let mut converged = false;
    for _ in 0..ZERO_MAX_ITER {
        let w = wp(z, &unit)?;
        let d = wp_prime(z, &unit)?;
        let dd = 6.0 * w * w - g2 / 2.0;
        let den = d * d - w * dd;
        if den.norm() == 0.0 || w.norm() == 0.0 {
            converged = true;
            break;
        }
        let step = w * d / den;
        z -= step;
        if step.norm() < 1e-15 {
            converged = true;
            break;
        }
    }
    let residual = wp(z, &unit)?.norm();
    if !(converged || residual < 1e-12) || residual > 1e-10 {
        return Err(Error::NonConvergence { what: "wp_zero", iterations: ZERO_MAX_ITER });
    }
    let s = lattice.scale();
    let plus = TorusPoint::new(s * unit.reduce(z), *lattice);
    let minus = TorusPoint::new(s * unit.reduce(-z), *lattice);
    Ok((plus, minus))
}

/// Whether the two zeros of `℘_Λ` coincide, i.e. `[τ] = [i]`.
pub fn wp_zero_is_double(lattice: &Lattice) -> Result<bool> {
    let (plus, minus) = wp_zero(lattice)?;
    let tol = DOUBLE_ZERO_TOL * lattice.scale().norm();
    Ok(plus.same_as(&minus, tol))
}
