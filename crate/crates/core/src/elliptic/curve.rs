use num_complex::Complex64;

use super::{mu_all, natural_differences};
use crate::error::{Error, Result};
use crate::liealg::GroupElem;
use crate::sampling::Sampler;
use crate::theta::ModularParam;

use super::modular::{modular_lambda, tau_from_r};

/// Relative tolerance for membership of a point in the curve.
pub const ON_CURVE_TOL: f64 = 1e-10;

/// Parameters of the curve `λ_i² − λ_j² = r_j − r_i` together with the
/// modulus that uniformises it by `λ_i = √s·μ_i(z)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveParams {
    r: [Complex64; 3],
    tau: ModularParam,
    offsets: [Complex64; 3],
    a: Complex64,
    b: Complex64,
    lambda_tau: Complex64,
    sqrt_scale: Complex64,
}

impl CurveParams {
    pub fn new(r1: Complex64, r2: Complex64, r3: Complex64) -> Result<Self> {
        let tau = tau_from_r(r1, r2, r3)?;
        let [n13, _, _] = natural_differences(&tau);
        let sqrt_scale = ((r1 - r3) / n13).sqrt();
        let r23 = r2 - r3;
        Ok(Self::assemble([r1, r2, r3], tau, ((r1 - r3) / r23).sqrt(), ((r1 - r2) / r23).sqrt(), sqrt_scale))
    }

    pub fn from_reals(r: [f64; 3]) -> Result<Self> {
        Self::new(r[0].into(), r[1].into(), r[2].into())
    }

    /// The curve realised by the `μ_i` without rescaling:
    /// `r = (R₁₃, R₂₃, 0)` built from the theta nulls, with
    /// `A = θ₃²/θ₂²` and `B = θ₄²/θ₂²`.
    pub fn natural(tau: ModularParam) -> Self {
        let [n13, _, n23] = natural_differences(&tau);
        let zero = Complex64::new(0.0, 0.0);
        let t2 = tau.null(2).powu(2);
        Self::assemble(
            [n13, n23, zero],
            tau,
            tau.null(3).powu(2) / t2,
            tau.null(4).powu(2) / t2,
            Complex64::new(1.0, 0.0),
        )
    }

    fn assemble(r: [Complex64; 3], tau: ModularParam, a: Complex64, b: Complex64, sqrt_scale: Complex64) -> Self {
        let mean = (r[0] + r[1] + r[2]) / 3.0;
        CurveParams {
            r,
            tau,
            offsets: [r[0] - mean, r[1] - mean, r[2] - mean],
            a,
            b,
            lambda_tau: modular_lambda(&tau),
            sqrt_scale,
        }
    }

    /// Flips the signs of the branch choices `A`, `B`.
    pub fn with_branch_signs(&self, flip_a: bool, flip_b: bool) -> Self {
        let mut c = *self;
        if flip_a {
            c.a = -c.a;
        }
        if flip_b {
            c.b = -c.b;
        }
        c
    }

    pub fn r(&self) -> [Complex64; 3] {
        self.r
    }

    /// `R_ij = r_i − r_j` for indices in `1..=3`.
    pub fn rdiff(&self, i: usize, j: usize) -> Complex64 {
        self.r[i - 1] - self.r[j - 1]
    }

    pub fn tau(&self) -> &ModularParam {
        &self.tau
    }

    /// Offsets `A_i = r_i − (r₁+r₂+r₃)/3`.
    pub fn offsets(&self) -> [Complex64; 3] {
        self.offsets
    }

    /// Branch choice `A` with `A² = (r₁−r₃)/(r₂−r₃)`.
    pub fn a(&self) -> Complex64 {
        self.a
    }

    /// Branch choice `B` with `B² = (r₁−r₂)/(r₂−r₃)`.
    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn lambda_tau(&self) -> Complex64 {
        self.lambda_tau
    }

    /// `√s` with `λ_i = √s·μ_i`.
    pub fn sqrt_scale(&self) -> Complex64 {
        self.sqrt_scale
    }

    /// Largest violation of the three defining relations.
    pub fn curve_residual(&self, l: &[Complex64; 3]) -> f64 {
        let mut worst = 0.0f64;
        for (i, j) in [(0, 2), (1, 0), (2, 1)] {
            worst = worst.max((l[i] * l[i] - l[j] * l[j] - (self.r[j] - self.r[i])).norm());
        }
        worst
    }

    /// `λ_i(z) = √s·μ_i(z)`.
    pub fn point_at(&self, z: Complex64) -> Result<CurvePoint> {
        let m = mu_all(z, &self.tau)?;
        Ok(CurvePoint { l: m.map(|v| v * self.sqrt_scale) })
    }

    /// A point obtained by choosing `λ₁` at random and solving for `λ₂`,
    /// `λ₃` with principal square roots.
    pub fn sample_point(&self, rng: &mut Sampler) -> CurvePoint {
        let l1 = rng.complex_normal();
        let l2 = (l1 * l1 + self.r[0] - self.r[1]).sqrt();
        let l3 = (l1 * l1 + self.r[0] - self.r[2]).sqrt();
        CurvePoint { l: [l1, l2, l3] }
    }

    /// The central coordinate `λ = λ_i² + A_i`.
    pub fn central(&self, p: &CurvePoint) -> Complex64 {
        p.l[0] * p.l[0] + self.offsets[0]
    }
}

/// A point `(λ₁, λ₂, λ₃)` of the curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePoint {
    pub l: [Complex64; 3],
}

impl CurvePoint {
    /// Validates the point against `curve` with relative tolerance `1e−10`.
    pub fn new(l: [Complex64; 3], curve: &CurveParams) -> Result<Self> {
        let size = l.iter().map(|v| v.norm_sqr()).fold(1.0, f64::max);
        let residual = curve.curve_residual(&l) / size;
        if residual < ON_CURVE_TOL {
            Ok(CurvePoint { l })
        } else {
            Err(Error::OffCurve { residual })
        }
    }

    pub fn new_unchecked(l: [Complex64; 3]) -> Self {
        CurvePoint { l }
    }

    /// `σ(t₁)λ = (λ₁, −λ₂, −λ₃)`, `σ(t₂)λ = (−λ₁, −λ₂, λ₃)`.
    pub fn act(&self, g: GroupElem) -> Self {
        let s = g.curve_signs();
        CurvePoint { l: [self.l[0] * s[0], self.l[1] * s[1], self.l[2] * s[2]] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::elliptic::mu;
    use crate::elliptic::Lattice;

    #[test]
    fn mu_relations_as_stated() {
        for tau in [c64(0.0, 1.0), c64(0.0, 2.0), c64(0.3, 0.9)] {
            let p = ModularParam::new(tau).unwrap();
            let [r13, r12, r23] = natural_differences(&p);
            assert!((r13 - r12 - r23).norm() < 1e-12);
            let mut rng = Sampler::new(1);
            let unit = Lattice::unit(tau).unwrap().half();
            for _ in 0..100 {
                let z = rng.avoiding(tau, &unit, &[c64(0.0, 0.0)], 5e-2);
                let [m1, m2, m3] = mu_all(z, &p).unwrap();
                assert!((m1 * m1 - m3 * m3 + r13).norm() < 1e-10);
                assert!((m2 * m2 - m1 * m1 - r12).norm() < 1e-10);
                assert!((m3 * m3 - m2 * m2 - r23).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn nulls_from_differences() {
        let p = ModularParam::new(c64(0.3, 0.9)).unwrap();
        let [r13, r12, r23] = natural_differences(&p);
        assert!((p.null(2).powu(4) * r13 * r12 - 1.0).norm() < 1e-12);
        assert!((p.null(3).powu(4) * r12 * r23 - 1.0).norm() < 1e-12);
        assert!((p.null(4).powu(4) * r13 * r23 - 1.0).norm() < 1e-12);
    }

    #[test]
    fn mu_at_quarter_matches_series() {
        let p = ModularParam::i();
        let z = c64(0.25, 0.0);
        let direct = crate::theta::theta_general(0.5, 0.0, 2.0 * z, &p).unwrap()
            / (crate::theta::theta_general(0.5, 0.0, c64(0.0, 0.0), &p).unwrap()
                * -crate::theta::theta_general(0.5, 0.5, 2.0 * z, &p).unwrap());
        assert!((mu(1, z, &p).unwrap() - direct).norm() < 1e-14);
        assert!(direct.norm().is_finite());
    }

    #[test]
    fn general_curve_uniformisation() {
        for r in [[2.0, 1.0, 0.0], [0.0, 1.0, 3.0], [1.5, -0.25, -2.0]] {
            let c = CurveParams::from_reals(r).unwrap();
            assert!((c.lambda_tau() - c.rdiff(2, 3) / c.rdiff(1, 3)).norm() < 1e-10);
            assert!((c.a() * c.a() - c.rdiff(1, 3) / c.rdiff(2, 3)).norm() < 1e-12);
            assert!((c.b() * c.b() - c.rdiff(1, 2) / c.rdiff(2, 3)).norm() < 1e-12);
            let mut rng = Sampler::new(4);
            let half = Lattice::unit(c.tau().tau()).unwrap().half();
            for _ in 0..20 {
                let z = rng.avoiding(c.tau().tau(), &half, &[c64(0.0, 0.0)], 5e-2);
                let p = c.point_at(z).unwrap();
                assert!(CurvePoint::new(p.l, &c).is_ok());
                let s = c.offsets();
                let lam: Vec<_> = (0..3).map(|i| p.l[i] * p.l[i] + s[i]).collect();
                assert!((lam[0] - lam[1]).norm() < 1e-9 && (lam[1] - lam[2]).norm() < 1e-9);
            }
            let o = c.offsets();
            assert!((o[0] + o[1] + o[2]).norm() < 1e-14);
        }
    }

    #[test]
    fn off_curve_rejected() {
        let c = CurveParams::from_reals([2.0, 1.0, 0.0]).unwrap();
        let p = c.point_at(c64(0.13, 0.21)).unwrap();
        let mut l = p.l;
        l[1] += 1e-2;
        assert!(matches!(CurvePoint::new(l, &c), Err(Error::OffCurve { .. })));
    }
}
