use num_complex::Complex64;

use super::{mu, wp, Lattice};
use crate::error::{Error, Result};
use crate::liealg::{D2Character, GroupElem};
use crate::linsolve;
use crate::sampling::Sampler;
use crate::theta::ModularParam;

const FIT_SEED: u64 = 0x5eed;
const SAMPLE_RADIUS: f64 = 5e-2;

/// `ξ_p(z) = μ₁(z)·μ₁(z − p)`.
pub fn xi_p(z: Complex64, p: Complex64, tau: &ModularParam) -> Result<Complex64> {
    let half = Lattice::unit(tau.tau())?.half();
    if half.distance(p) < 1e-10 {
        return Err(Error::Precondition(format!("p = {p} lies in the half lattice")));
    }
    Ok(mu(1, z, tau)? * mu(1, z - p, tau)?)
}

/// Fits `ξ_p²` against `{1, ξ_p, ℘_{½Λ}(z), ℘_{½Λ}(z − p)}` at ten points and
/// returns the largest mismatch at ten fresh points.
pub fn xi_p_span_residual(p: Complex64, tau: &ModularParam, seed: u64) -> Result<f64> {
    let half = Lattice::unit(tau.tau())?.half();
    let mut rng = Sampler::new(seed);
    let zero = Complex64::new(0.0, 0.0);
    let row = |rng: &mut Sampler| -> Result<(Vec<Complex64>, Complex64)> {
        let z = rng.avoiding(tau.tau(), &half, &[zero, p], SAMPLE_RADIUS);
        let x = xi_p(z, p, tau)?;
        let basis = vec![Complex64::new(1.0, 0.0), x, wp(z, &half)?, wp(z - p, &half)?];
        Ok((basis, x * x))
    };
    let mut a = Vec::new();
    let mut b = Vec::new();
    for _ in 0..10 {
        let (r, v) = row(&mut rng)?;
        a.push(r);
        b.push(v);
    }
    let coef = linsolve::least_squares(&a, &b)?;
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let (r, v) = row(&mut rng)?;
        let fit: Complex64 = r.iter().zip(&coef).map(|(x, c)| x * c).sum();
        worst = worst.max((fit - v).norm());
    }
    Ok(worst)
}

/// Result of [`two_point_split`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SplitFit {
    pub c1: Complex64,
    pub c2: Complex64,
    /// Largest mismatch at eight validation points.
    pub residual: f64,
}

impl SplitFit {
    /// Whether the residual marks `f` as lying in the two-term span.
    pub fn in_span(&self, tol: f64) -> bool {
        self.residual < tol
    }
}

/// Fits `f(z) ≈ c₁μ_i(z − z₊) + c₂μ_i(z − z₋)` at two generic points and
/// validates at eight fresh points.
pub fn two_point_split(
    i: usize,
    f: &dyn Fn(Complex64) -> Result<Complex64>,
    z_plus: Complex64,
    z_minus: Complex64,
    tau: &ModularParam,
) -> Result<SplitFit> {
    let half = Lattice::unit(tau.tau())?.half();
    if half.distance(z_plus - z_minus) < 1e-8 {
        return Err(Error::Precondition("z_plus − z_minus lies in the half lattice".into()));
    }
    let avoid = [Complex64::new(0.0, 0.0), z_plus, z_minus];
    let mut rng = Sampler::new(FIT_SEED);
    let basis = |z: Complex64| -> Result<[Complex64; 2]> { Ok([mu(i, z - z_plus, tau)?, mu(i, z - z_minus, tau)?]) };
    let p1 = rng.avoiding(tau.tau(), &half, &avoid, SAMPLE_RADIUS);
    let p2 = rng.avoiding(tau.tau(), &half, &avoid, SAMPLE_RADIUS);
    let (b1, b2) = (basis(p1)?, basis(p2)?);
    let c = linsolve::solve(vec![b1.to_vec(), b2.to_vec()], vec![f(p1)?, f(p2)?])?;
    let mut residual = 0.0f64;
    for _ in 0..8 {
        let z = rng.avoiding(tau.tau(), &half, &avoid, SAMPLE_RADIUS);
        let b = basis(z)?;
        residual = residual.max((c[0] * b[0] + c[1] * b[1] - f(z)?).norm());
    }
    Ok(SplitFit { c1: c[0], c2: c[1], residual })
}

/// `¼ Σ_γ α(γ)·f(σ(γ)z)` over `D₂`, with `σ(t₁)z = z+½`, `σ(t₂)z = z+τ/2`.
pub fn isotypical_project(
    f: &dyn Fn(Complex64) -> Result<Complex64>,
    ch: D2Character,
    z: Complex64,
    tau: &ModularParam,
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for g in GroupElem::d2() {
        acc += ch.value(g) * f(g.translate(z, tau.tau()))?;
    }
    Ok(acc / 4.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::elliptic::mu_all;

    fn tau2() -> ModularParam {
        ModularParam::new(c64(0.0, 2.0)).unwrap()
    }

    #[test]
    fn xi_is_d2_invariant() {
        let t = ModularParam::new(c64(0.3, 0.9)).unwrap();
        let p = c64(0.21, 0.13);
        let z = c64(0.37, 0.11);
        let x = xi_p(z, p, &t).unwrap();
        assert!((xi_p(z + 0.5, p, &t).unwrap() - x).norm() < 1e-10);
        assert!((xi_p(z + t.tau() / 2.0, p, &t).unwrap() - x).norm() < 1e-10);
        assert!(matches!(xi_p(z, c64(0.5, 0.0), &t), Err(Error::Precondition(_))));
    }

    #[test]
    fn xi_square_span() {
        let t = ModularParam::new(c64(0.3, 0.9)).unwrap();
        assert!(xi_p_span_residual(c64(0.21, 0.13), &t, 3).unwrap() < 1e-8);
    }

    #[test]
    fn split_recovers_basis_function() {
        let t = tau2();
        let (zp, zm) = (c64(0.2, 0.3), c64(-0.2, -0.3));
        let f = |z: Complex64| mu(2, z - zp, &t);
        let fit = two_point_split(2, &f, zp, zm, &t).unwrap();
        assert!((fit.c1 - 1.0).norm() < 1e-10 && fit.c2.norm() < 1e-10);
        assert!(fit.in_span(1e-10));
    }

    #[test]
    fn split_flags_double_pole() {
        let t = tau2();
        let f = |z: Complex64| Ok(mu(1, z, &t)?.powu(2));
        let fit = two_point_split(1, &f, c64(0.2, 0.3), c64(-0.2, -0.3), &t).unwrap();
        assert!(!fit.in_span(1e-6));
    }

    #[test]
    fn projections() {
        let t = ModularParam::new(c64(0.3, 0.9)).unwrap();
        let z = c64(0.17, 0.29);
        let m1 = |z: Complex64| mu(1, z, &t);
        let direct = mu(1, z, &t).unwrap();
        let p01 = isotypical_project(&m1, D2Character::new(0, 1), z, &t).unwrap();
        assert!((p01 - direct).norm() < 1e-12);
        let p00 = isotypical_project(&m1, D2Character::new(0, 0), z, &t).unwrap();
        assert!(p00.norm() < 1e-12);
        let one = |_z: Complex64| Ok(c64(1.0, 0.0));
        let c = isotypical_project(&one, D2Character::new(0, 0), z, &t).unwrap();
        assert!((c - 1.0).norm() < 1e-15);
        // partition of unity over the four characters
        let g = |z: Complex64| Ok(mu_all(z, &t)?.iter().sum::<Complex64>() + z * z);
        let total: Complex64 =
            D2Character::all().into_iter().map(|ch| isotypical_project(&g, ch, z, &t).unwrap()).sum();
        assert!((total - g(z).unwrap()).norm() < 1e-12);
    }
}
