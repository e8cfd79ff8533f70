//! Holod's basis `λ^m λ_i v_i`, `λ^{m−1} λ_jλ_k v_i` and its splitting into
//! two subalgebras with poles on one orbit each.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::elliptic::{mu, two_point_split, wp, wp_prime, wp_zero, wp_zero_is_double, CurveParams, Lattice, SplitFit};
use crate::error::{Error, Result};
use crate::liealg::{bracket, levi_civita, v, Mat2};
use crate::sampling::Sampler;

/// Exponent range `l, s ∈ −2..=2` of the bracket checks.
pub const HOLOD_RANGE: std::ops::RangeInclusive<i32> = -2..=2;

/// `X^{2m}` (even) or `X^{2m+1}` (odd).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HolodParity {
    Even,
    Odd,
}

fn others(i: usize) -> (usize, usize) {
    (i % 3 + 1, (i + 1) % 3 + 1)
}

/// `λ = λ_i² + A_i` and the point `λ(z)` on `curve`.
fn central_at(z: Complex64, curve: &CurveParams) -> Result<(Complex64, [Complex64; 3])> {
    let p = curve.point_at(z)?;
    Ok((curve.central(&p), p.l))
}

fn basis_from(i: usize, m: i32, parity: HolodParity, lam: Complex64, l: &[Complex64; 3]) -> Mat2 {
    let (j, k) = others(i);
    let coeff = match parity {
        HolodParity::Even => lam.powi(m - 1) * l[j - 1] * l[k - 1],
        HolodParity::Odd => lam.powi(m) * l[i - 1],
    };
    v(i) * coeff
}

/// `X_i^{2m} = λ^{m−1}λ_jλ_k v_i` or `X_i^{2m+1} = λ^m λ_i v_i` at `λ(z)`.
pub fn holod_basis(i: usize, m: i32, parity: HolodParity, z: Complex64, curve: &CurveParams) -> Result<Mat2> {
    if !(1..=3).contains(&i) {
        return Err(Error::Precondition(format!("basis index {i} out of range 1..3")));
    }
    let (lam, l) = central_at(z, curve)?;
    if lam.norm() < 1e-12 {
        return Err(Error::Pole { what: "holod basis (lambda = 0)", z });
    }
    Ok(basis_from(i, m, parity, lam, &l))
}

/// Largest residual of the three bracket families over `i, j ∈ 1..3` and
/// `l, s` in `range`, each relative to `max(1, |lhs|, |rhs|)`.
pub fn holod_bracket_residual(z: Complex64, curve: &CurveParams, range: std::ops::RangeInclusive<i32>) -> Result<f64> {
    use HolodParity::{Even, Odd};
    let (lam, l) = central_at(z, curve)?;
    if lam.norm() < 1e-12 {
        return Err(Error::Pole { what: "holod basis (lambda = 0)", z });
    }
    let a = curve.offsets();
    let x = |i: usize, n: i32| {
        let m = n.div_euclid(2);
        if n.rem_euclid(2) == 0 {
            basis_from(i, m, Even, lam, &l)
        } else {
            basis_from(i, m, Odd, lam, &l)
        }
    };
    let mut worst = 0.0f64;
    let mut record = |lhs: Mat2, rhs: Mat2| {
        let scale = lhs.max_abs().max(rhs.max_abs()).max(1.0);
        worst = worst.max(lhs.dist(&rhs) / scale);
    };
    for i in 1..=3 {
        for j in 1..=3 {
            let mut ks = (1..=3).filter(|&k| levi_civita(i, j, k) != 0.0);
            let (k, eps) = match ks.next() {
                Some(k) => (k, levi_civita(i, j, k)),
                None => (1, 0.0),
            };
            for ls in range.clone() {
                for s in range.clone() {
                    let n = 2 * (ls + s);
                    record(bracket(&x(i, 2 * ls + 1), &x(j, 2 * s + 1)), x(k, n + 2) * eps);
                    record(bracket(&x(i, 2 * ls + 1), &x(j, 2 * s)), (x(k, n + 1) - x(k, n - 1) * a[i - 1]) * eps);
                    record(bracket(&x(i, 2 * ls), &x(j, 2 * s)), (x(k, n) - x(k, n - 2) * a[k - 1]) * eps);
                }
            }
        }
    }
    Ok(worst)
}

/// Lattice `L` and argument `u` with `λ = ℘_L(u)`: `u = z/a`, `L = ½Λ/a`,
/// `a = √s/(2πθ₂θ₃θ₄)`.
fn uniformizing(z: Complex64, curve: &CurveParams) -> Result<(Lattice, Complex64)> {
    let tau = curve.tau();
    let a = curve.sqrt_scale() / (2.0 * PI * tau.null(2) * tau.null(3) * tau.null(4));
    Ok((Lattice::new(tau.tau(), 0.5 / a)?, z / a))
}

/// `|λ − ℘_L(u)|` and `|λ₁λ₂λ₃ + ½℘′_L(u)|` at `λ(z)`, relative to
/// `max(1, |λ|)` and `max(1, |λ₁λ₂λ₃|)`.
pub fn holod_uniformization_residuals(z: Complex64, curve: &CurveParams) -> Result<(f64, f64)> {
    let (lam, l) = central_at(z, curve)?;
    let (lat, u) = uniformizing(z, curve)?;
    let y = l[0] * l[1] * l[2];
    let first = (lam - wp(u, &lat)?).norm() / lam.norm().max(1.0);
    let second = (y + 0.5 * wp_prime(u, &lat)?).norm() / y.norm().max(1.0);
    Ok((first, second))
}

/// The fitted splitting `W_i^± ∈ ℂμ_i(z ∓ z₀)v_i`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HolodSplit {
    pub i: usize,
    /// A zero of `λ`, i.e. of `℘_{½Λ}`.
    pub z0: Complex64,
    /// `λ_i/λ ≈ c₁μ_i(z − z₀) + c₂μ_i(z + z₀)`.
    pub fit_y: SplitFit,
    /// `λ_jλ_k/λ ≈ d₁μ_i(z − z₀) + d₂μ_i(z + z₀)`.
    pub fit_z: SplitFit,
    /// `d₂c₁ − c₂d₁`.
    pub det: Complex64,
    curve: CurveParams,
}

impl HolodSplit {
    fn yz(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        let (lam, l) = central_at(z, &self.curve)?;
        let (j, k) = others(self.i);
        Ok((l[self.i - 1] / lam, l[j - 1] * l[k - 1] / lam))
    }

    /// `W_i^+ = d₂Y − c₂Z`, with `Y = λ_i v_i/λ` and `Z = λ_jλ_k v_i/λ`.
    pub fn w_plus(&self, z: Complex64) -> Result<Mat2> {
        let (y, zz) = self.yz(z)?;
        Ok(v(self.i) * (self.fit_z.c2 * y - self.fit_y.c2 * zz))
    }

    /// `W_i^− = d₁Y − c₁Z`.
    pub fn w_minus(&self, z: Complex64) -> Result<Mat2> {
        let (y, zz) = self.yz(z)?;
        Ok(v(self.i) * (self.fit_z.c1 * y - self.fit_y.c1 * zz))
    }

    /// Largest relative deviation of `W^+/μ_i(z − z₀)` from `d₂c₁ − c₂d₁`
    /// and of `W^−/μ_i(z + z₀)` from its negative, over seeded samples.
    pub fn constancy_residual(&self, samples: usize, seed: u64) -> Result<f64> {
        let tau = self.curve.tau();
        let half = Lattice::unit(tau.tau())?.half();
        let avoid = [Complex64::new(0.0, 0.0), self.z0, -self.z0];
        let mut rng = Sampler::new(seed);
        let vi = v(self.i);
        // v_i has a nonzero entry in every row; read the coefficient off the largest one
        let (r, c) = if vi[(0, 0)].norm() > 0.0 { (0, 0) } else { (0, 1) };
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let z = rng.avoiding(tau.tau(), &half, &avoid, 5e-2);
            let plus = self.w_plus(z)?[(r, c)] / vi[(r, c)] / mu(self.i, z - self.z0, tau)?;
            let minus = self.w_minus(z)?[(r, c)] / vi[(r, c)] / mu(self.i, z + self.z0, tau)?;
            worst = worst.max((plus - self.det).norm() / self.det.norm());
            worst = worst.max((minus + self.det).norm() / self.det.norm());
        }
        Ok(worst)
    }
}

/// Splits `Y_i¹`, `Z_i¹` into the parts with poles on `D₂·z₀` and `D₂·(−z₀)`.
/// Fails with [`Error::DegenerateTau`] when `℘_{½Λ}` has a double zero.
pub fn holod_w_split(i: usize, curve: &CurveParams) -> Result<HolodSplit> {
    if !(1..=3).contains(&i) {
        return Err(Error::Precondition(format!("basis index {i} out of range 1..3")));
    }
    let tau = curve.tau();
    let half = Lattice::unit(tau.tau())?.half();
    if wp_zero_is_double(&half)? {
        return Err(Error::DegenerateTau { tau: tau.tau() });
    }
    let z0 = wp_zero(&half)?.0.z;
    let (j, k) = others(i);
    let y = |z: Complex64| -> Result<Complex64> {
        let (lam, l) = central_at(z, curve)?;
        Ok(l[i - 1] / lam)
    };
    let zf = |z: Complex64| -> Result<Complex64> {
        let (lam, l) = central_at(z, curve)?;
        Ok(l[j - 1] * l[k - 1] / lam)
    };
    let fit_y = two_point_split(i, &y, z0, -z0, tau)?;
    let fit_z = two_point_split(i, &zf, z0, -z0, tau)?;
    let det = fit_z.c2 * fit_y.c1 - fit_y.c2 * fit_z.c1;
    let size = (fit_y.c1.norm() + fit_y.c2.norm()) * (fit_z.c1.norm() + fit_z.c2.norm());
    if det.norm() <= 1e-10 * size {
        return Err(Error::Degenerate(format!("d2 c1 − c2 d1 = {det} vanishes")));
    }
    Ok(HolodSplit { i, z0, fit_y, fit_z, det, curve: *curve })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::theta::ModularParam;

    fn sample_points(curve: &CurveParams, n: usize, seed: u64) -> Vec<Complex64> {
        let tau = curve.tau();
        let half = Lattice::unit(tau.tau()).unwrap().half();
        let z0 = wp_zero(&half).unwrap().0.z;
        let mut rng = Sampler::new(seed);
        (0..n).map(|_| rng.avoiding(tau.tau(), &half, &[c64(0.0, 0.0), z0, -z0], 5e-2)).collect()
    }

    #[test]
    fn bracket_table() {
        for curve in [
            CurveParams::natural(ModularParam::new(c64(0.0, 2.0)).unwrap()),
            CurveParams::from_reals([0.0, 1.0, 3.0]).unwrap(),
        ] {
            for z in sample_points(&curve, 10, 1) {
                let r = holod_bracket_residual(z, &curve, HOLOD_RANGE).unwrap();
                assert!(r < 1e-9, "{r}");
            }
        }
    }

    #[test]
    fn uniformization() {
        for curve in [
            CurveParams::natural(ModularParam::new(c64(0.3, 0.9)).unwrap()),
            CurveParams::from_reals([2.0, 1.0, 0.0]).unwrap(),
            CurveParams::from_reals([0.0, 1.0, 3.0]).unwrap(),
        ] {
            for z in sample_points(&curve, 10, 2) {
                let (a, b) = holod_uniformization_residuals(z, &curve).unwrap();
                assert!(a < 1e-9 && b < 1e-9, "{a} {b}");
            }
        }
    }

    #[test]
    fn split_at_two_i() {
        let curve = CurveParams::natural(ModularParam::new(c64(0.0, 2.0)).unwrap());
        for i in 1..=3 {
            let s = holod_w_split(i, &curve).unwrap();
            assert!(s.fit_y.residual < 1e-8 && s.fit_z.residual < 1e-8);
            assert!(s.constancy_residual(20, 3).unwrap() < 1e-8);
        }
    }

    #[test]
    fn split_degenerates_at_i() {
        let curve = CurveParams::natural(ModularParam::i());
        assert!(matches!(holod_w_split(1, &curve), Err(Error::DegenerateTau { .. })));
        let square = CurveParams::from_reals([2.0, 1.0, 0.0]).unwrap();
        assert!(matches!(holod_w_split(2, &square), Err(Error::DegenerateTau { .. })));
    }
}
