//! The intertwiner `Ω` on the torus and on the curve, with its sign variants,
//! LDU factorization and adjoint action.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::elliptic::{natural_differences, CurveParams, CurvePoint, POLE_THRESHOLD};
use crate::error::{Error, Result};
use crate::liealg::{t1, t2, GroupElem, Mat2};
use crate::theta::{theta_jacobi, ModularParam};
use crate::I;

/// Sign selecting `ψ₊` or `ψ₋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

fn theta1_2z(z: Complex64, tau: &ModularParam, what: &'static str) -> Result<Complex64> {
    let t = theta_jacobi(1, 2.0 * z, tau)?;
    if t.norm() < POLE_THRESHOLD {
        return Err(Error::Pole { what, z });
    }
    Ok(t)
}

/// `ψ_± = ±(θ₄²/θ₃)·θ₃(2z)/θ₁(2z) − (θ₃²/θ₄)·θ₄(2z)/θ₁(2z)`.
pub fn psi_pm(sign: Sign, z: Complex64, tau: &ModularParam) -> Result<Complex64> {
    let d = theta1_2z(z, tau, "psi")?;
    let (n3, n4) = (tau.null(3), tau.null(4));
    let a = n4 * n4 / n3 * theta_jacobi(3, 2.0 * z, tau)? / d;
    let b = n3 * n3 / n4 * theta_jacobi(4, 2.0 * z, tau)? / d;
    Ok(sign.value() * a - b)
}

/// `T₁^{a₁}T₂^{a₂} · Ω · T₁^{b₁}T₂^{b₂}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct OmegaVariant {
    pub a1: bool,
    pub a2: bool,
    pub b1: bool,
    pub b2: bool,
}

impl OmegaVariant {
    pub const PLAIN: OmegaVariant = OmegaVariant { a1: false, a2: false, b1: false, b2: false };

    /// Variant from the bits of `n` in the order `a₁ a₂ b₁ b₂` (most significant first).
    pub fn from_index(n: u8) -> Self {
        assert!(n < 16, "variant index out of range");
        OmegaVariant { a1: n & 8 != 0, a2: n & 4 != 0, b1: n & 2 != 0, b2: n & 1 != 0 }
    }

    pub fn index(&self) -> u8 {
        (self.a1 as u8) << 3 | (self.a2 as u8) << 2 | (self.b1 as u8) << 1 | self.b2 as u8
    }

    pub fn all() -> impl Iterator<Item = OmegaVariant> {
        (0..16).map(Self::from_index)
    }

    fn left(&self) -> Mat2 {
        pow(t1(), self.a1) * pow(t2(), self.a2)
    }

    fn right(&self) -> Mat2 {
        pow(t1(), self.b1) * pow(t2(), self.b2)
    }

    pub fn apply(&self, m: &Mat2) -> Mat2 {
        self.left() * *m * self.right()
    }
}

impl std::fmt::Display for OmegaVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let b = |x: bool| x as u8;
        write!(f, "({},{},{},{})", b(self.a1), b(self.a2), b(self.b1), b(self.b2))
    }
}

fn pow(m: Mat2, on: bool) -> Mat2 {
    if on {
        m
    } else {
        Mat2::identity()
    }
}

/// `Ω(z) = [[θ₃(2z|2τ), ψ₋θ₂(2z|2τ)], [θ₂(2z|2τ), ψ₊θ₃(2z|2τ)]]`, with the
/// variant's outer factors applied.
pub fn omega(z: Complex64, tau: &ModularParam, variant: OmegaVariant) -> Result<Mat2> {
    let tau2 = tau.doubled()?;
    let a = theta_jacobi(3, 2.0 * z, &tau2)?;
    let c = theta_jacobi(2, 2.0 * z, &tau2)?;
    let m = Mat2::new(a, psi_pm(Sign::Minus, z, tau)? * c, c, psi_pm(Sign::Plus, z, tau)? * a);
    Ok(variant.apply(&m))
}

/// `−θ₂(0)²·θ₁(2z)`, the determinant of `Ω(z)`.
pub fn omega_det_closed(z: Complex64, tau: &ModularParam) -> Result<Complex64> {
    Ok(-tau.null(2).powu(2) * theta_jacobi(1, 2.0 * z, tau)?)
}

/// Residuals of the transformation laws of `Ω` at one point. Matrix-level
/// residuals are divided by `max(1, |Ω|)` over the matrices compared; the
/// `Ad`-level ones are absolute.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransformResiduals {
    /// `Ω(z+½) − ρ′(t₁)Ω(z)`.
    pub half: f64,
    /// `Ω(z+τ/2) − e^{−πi(2z+τ/2)}ρ′(t₂)Ω(z)`.
    pub half_tau: f64,
    /// `Ω(−z) − Ω(z)ρ′(t₁)`.
    pub parity: f64,
    /// The `τ/2` law with its scalar prefactor dropped; expected to fail.
    pub half_tau_unscaled: f64,
    /// `Ad(Ω(z+½)) − ρ(t₁)∘Ad(Ω(z))` on `h, e, f`.
    pub ad_half: f64,
    /// `Ad(Ω(z+τ/2)) − ρ(t₂)∘Ad(Ω(z))` on `h, e, f`.
    pub ad_half_tau: f64,
}

impl TransformResiduals {
    /// Largest residual among the laws that should hold.
    pub fn max_law(&self) -> f64 {
        [self.half, self.half_tau, self.parity, self.ad_half, self.ad_half_tau].into_iter().fold(0.0, f64::max)
    }
}

/// Transformation-law residuals of `Ω` (plain variant) at `z`.
pub fn omega_transform_check(z: Complex64, tau: &ModularParam) -> Result<TransformResiduals> {
    omega_transform_check_variant(z, tau, OmegaVariant::PLAIN)
}

/// As [`omega_transform_check`] for any variant. Only the `Ad`-level fields
/// are meaningful for variants with left factors.
pub fn omega_transform_check_variant(
    z: Complex64,
    tau: &ModularParam,
    variant: OmegaVariant,
) -> Result<TransformResiduals> {
    let t = tau.tau();
    let o = omega(z, tau, variant)?;
    let o_half = omega(z + 0.5, tau, variant)?;
    let o_tau = omega(z + t / 2.0, tau, variant)?;
    let o_neg = omega(-z, tau, variant)?;
    let pre = (-I * PI * (2.0 * z + t / 2.0)).exp();
    let r1 = GroupElem::T1.rho_prime();
    let r2 = GroupElem::T2.rho_prime();
    let mut ad_half = 0.0f64;
    let mut ad_half_tau = 0.0f64;
    for x in [crate::liealg::sl2_h(), crate::liealg::sl2_e(), crate::liealg::sl2_f()] {
        let base = conj_by(&o, &x)?;
        ad_half = ad_half.max(conj_by(&o_half, &x)?.dist(&conj_by(&r1, &base)?));
        ad_half_tau = ad_half_tau.max(conj_by(&o_tau, &x)?.dist(&conj_by(&r2, &base)?));
    }
    let rel = |a: &Mat2, b: &Mat2| a.dist(b) / a.max_abs().max(b.max_abs()).max(1.0);
    Ok(TransformResiduals {
        half: rel(&o_half, &(r1 * o)),
        half_tau: rel(&o_tau, &(r2 * o).scale(pre)),
        parity: rel(&o_neg, &(o * r1)),
        half_tau_unscaled: rel(&o_tau, &(r2 * o)),
        ad_half,
        ad_half_tau,
    })
}

fn conj_by(m: &Mat2, x: &Mat2) -> Result<Mat2> {
    Ok(*m * *x * m.inverse()?)
}

/// `Ad(Ω(z))A` for traceless `A`.
pub fn ad_omega(z: Complex64, a: &Mat2, tau: &ModularParam, variant: OmegaVariant) -> Result<Mat2> {
    if a.trace().norm() > 1e-12 * a.max_abs().max(1.0) {
        return Err(Error::Precondition("ad_omega expects a traceless matrix".into()));
    }
    conj_by(&omega(z, tau, variant)?, a)
}

/// The intrinsic form of `Ω` on the curve:
/// `(1/√2)[[√P, (−λ₂/A − λ₃/B)√M], [√M, (λ₂/A − λ₃/B)√P]]` with `P = Aλ₂ + Bλ₃`
/// and `M = Aλ₂ − Bλ₃`, principal square roots.
pub fn omega_intrinsic(l: &[Complex64; 3], curve: &CurveParams) -> Result<Mat2> {
    let p = CurvePoint::new(*l, curve)?;
    Ok(omega_intrinsic_unchecked(&p, curve))
}

fn omega_intrinsic_unchecked(p: &CurvePoint, curve: &CurveParams) -> Mat2 {
    let [_, l2, l3] = p.l;
    let (a, b) = (curve.a(), curve.b());
    let sp = (a * l2 + b * l3).sqrt();
    let sm = (a * l2 - b * l3).sqrt();
    let m = Mat2::new(sp, (-l2 / a - l3 / b) * sm, sm, (l2 / a - l3 / b) * sp);
    m.scale(Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0))
}

/// Best match of `Ω(λ(z))` against `V·Ω(z)·diag(d₁, d₂)` over the sixteen
/// variants `V`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OmegaMatch {
    pub variant: OmegaVariant,
    pub d1: Complex64,
    pub d2: Complex64,
    /// Entrywise residual relative to the largest entry of `Ω(λ)`.
    pub residual: f64,
}

/// Residual above which no variant counts as a match.
pub const MATCH_TOL: f64 = 1e-8;

/// Matches the intrinsic `Ω` at the curve point `λ(z)` with the torus `Ω(z)`.
pub fn match_omega_intrinsic(z: Complex64, curve: &CurveParams) -> Result<OmegaMatch> {
    let tau = curve.tau();
    let p = curve.point_at(z)?;
    let target = omega_intrinsic_unchecked(&p, curve);
    let base = omega(z, tau, OmegaVariant::PLAIN)?;
    let size = target.max_abs();
    let mut best: Option<OmegaMatch> = None;
    for variant in OmegaVariant::all() {
        let v = variant.apply(&base);
        let mut d = [Complex64::new(0.0, 0.0); 2];
        for (j, dj) in d.iter_mut().enumerate() {
            let num = v[(0, j)].conj() * target[(0, j)] + v[(1, j)].conj() * target[(1, j)];
            let den = v[(0, j)].norm_sqr() + v[(1, j)].norm_sqr();
            *dj = num / den;
        }
        let fitted = v * Mat2::diag(d);
        let residual = fitted.dist(&target) / size;
        if best.is_none_or(|b| residual < b.residual) {
            best = Some(OmegaMatch { variant, d1: d[0], d2: d[1], residual });
        }
    }
    let best = best.expect("sixteen variants");
    if best.residual > MATCH_TOL {
        return Err(Error::BranchInconsistency { best: best.residual });
    }
    Ok(best)
}

/// Scale relations expected of a match on the natural curve:
/// `|d₁²θ₂²θ₁(2z) − 1|` and `|d₂ ∓ R₂₃d₁|`, the sign of the latter depending
/// on the square-root branches.
pub fn natural_match_scale_defects(m: &OmegaMatch, z: Complex64, tau: &ModularParam) -> Result<(f64, f64)> {
    let t1z = theta_jacobi(1, 2.0 * z, tau)?;
    let r23 = natural_differences(tau)[2];
    let first = (m.d1 * m.d1 * tau.null(2).powu(2) * t1z - 1.0).norm();
    let second = (m.d2 - r23 * m.d1).norm().min((m.d2 + r23 * m.d1).norm()) / m.d2.norm().max(1.0);
    Ok((first, second))
}

/// `Ω(z) = L·D·U` with `L₂₁ = θ₂(2z|2τ)/θ₃(2z|2τ)`, `D = diag(θ₃(2z|2τ), det Ω/θ₃(2z|2τ))`
/// and `U₁₂ = ψ₋θ₂(2z|2τ)/θ₃(2z|2τ)`.
pub fn ldu_factor(z: Complex64, tau: &ModularParam) -> Result<(Mat2, Mat2, Mat2)> {
    let tau2 = tau.doubled()?;
    let a = theta_jacobi(3, 2.0 * z, &tau2)?;
    if a.norm() < POLE_THRESHOLD {
        return Err(Error::Singular(format!("zero pivot theta3(2z|2tau) at z = {z}")));
    }
    let c = theta_jacobi(2, 2.0 * z, &tau2)?;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let det = omega_det_closed(z, tau)?;
    let l = Mat2::new(one, zero, c / a, one);
    let d = Mat2::diag([a, det / a]);
    let u = Mat2::new(one, psi_pm(Sign::Minus, z, tau)? * c / a, zero, one);
    Ok((l, d, u))
}
