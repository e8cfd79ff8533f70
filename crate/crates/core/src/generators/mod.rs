//! Normal-form generator triples and the algebras built from them.
//!
//! On the torus `H, E, F` are `Ad(Ω(z))` applied to `h, e, f`; on the curve
//! they have closed forms in `λ₁, λ₂, λ₃`. The submodules realize the Uglov
//! and Holod algebras.

mod holod;
mod uglov;

pub use holod::{
    holod_basis, holod_bracket_residual, holod_uniformization_residuals, holod_w_split, HolodParity, HolodSplit,
    HOLOD_RANGE,
};
pub use uglov::{uglov_calibration, uglov_check, uglov_x, UglovReport};

use num_complex::Complex64;

use crate::elliptic::{mu_all, CurveParams, CurvePoint, Lattice};
use crate::error::{Error, Result};
use crate::intertwiner::{ad_omega, omega, OmegaVariant};
use crate::liealg::{bracket, levi_civita, rho, sl2_e, sl2_f, sl2_h, so31_boost, v, GroupElem, Mat, Mat2, Mat4};
use crate::theta::ModularParam;
use crate::I;

/// `Γ(3/4)` to 20 significant digits.
pub const GAMMA_3_4: f64 = 1.225_416_702_465_177_6;

/// `α = Γ(3/4)²/√π`.
pub fn alpha() -> f64 {
    GAMMA_3_4 * GAMMA_3_4 / std::f64::consts::PI.sqrt()
}

/// How a triple is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HefMode {
    /// `Ad(Ω(z))` applied to `h, e, f`.
    ViaAdOmega,
    /// Closed forms in `μ₁, μ₂, μ₃` and theta nulls.
    ClosedForm,
    /// The curve forms at `λ_i = μ_i(z)` on the natural curve.
    Intrinsic,
}

/// Values `(H, E, F)` at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triple {
    pub h: Mat2,
    pub e: Mat2,
    pub f: Mat2,
}

impl Triple {
    pub fn as_array(&self) -> [Mat2; 3] {
        [self.h, self.e, self.f]
    }

    /// Largest of `|[H,E]−2E|`, `|[H,F]+2F|`, `|[E,F]−H|`.
    pub fn sl2_defect(&self) -> f64 {
        let (h, e, f) = (self.h, self.e, self.f);
        [bracket(&h, &e).dist(&(e * 2.0)), bracket(&h, &f).dist(&(f * -2.0)), bracket(&e, &f).dist(&h)]
            .into_iter()
            .fold(0.0, f64::max)
    }

    /// Largest trace modulus.
    pub fn trace_defect(&self) -> f64 {
        self.as_array().iter().map(|m| m.trace().norm()).fold(0.0, f64::max)
    }

    pub fn dist(&self, other: &Triple) -> f64 {
        self.h.dist(&other.h).max(self.e.dist(&other.e)).max(self.f.dist(&other.f))
    }

    pub fn map(&self, g: impl Fn(&Mat2) -> Mat2) -> Triple {
        Triple { h: g(&self.h), e: g(&self.e), f: g(&self.f) }
    }

    pub fn max_abs(&self) -> f64 {
        self.as_array().iter().map(Mat2::max_abs).fold(0.0, f64::max)
    }

    pub fn max_imag(&self) -> f64 {
        self.as_array().iter().map(Mat2::max_imag).fold(0.0, f64::max)
    }
}

/// `(H(z), E(z), F(z))` computed according to `mode`.
pub fn hef(z: Complex64, tau: &ModularParam, mode: HefMode) -> Result<Triple> {
    match mode {
        HefMode::ViaAdOmega => hef_variant(z, tau, OmegaVariant::PLAIN),
        HefMode::ClosedForm => hef_closed(z, tau),
        HefMode::Intrinsic => {
            let curve = CurveParams::natural(*tau);
            hef_tilde(&mu_all(z, tau)?, &curve)
        }
    }
}

/// `Ad(V·Ω(z))` applied to `h, e, f` for a variant `V`.
pub fn hef_variant(z: Complex64, tau: &ModularParam, variant: OmegaVariant) -> Result<Triple> {
    Ok(Triple {
        h: ad_omega(z, &sl2_h(), tau, variant)?,
        e: ad_omega(z, &sl2_e(), tau, variant)?,
        f: ad_omega(z, &sl2_f(), tau, variant)?,
    })
}

fn hef_closed(z: Complex64, tau: &ModularParam) -> Result<Triple> {
    let [m1, m2, m3] = mu_all(z, tau)?;
    let t2 = tau.null(2).powu(2);
    let t3 = tau.null(3).powu(2);
    let t4 = tau.null(4).powu(2);
    let h = Mat2::new(t2 * m2 * m3, -t4 * m1 * m2 - t3 * m1 * m3, -t4 * m1 * m2 + t3 * m1 * m3, -t2 * m2 * m3);
    let (a, b) = (t3 / t2, t4 / t2);
    let e = Mat2::new(m1, -a * m2 - b * m3, a * m2 - b * m3, -m1) * 0.5;
    let f11 = -0.5 * t2 * t2 * m1 * (m2 * m2 + t3 / (t2 * t4));
    let f12 = 0.5 * (-t4 * m2 - t3 * m3) * (1.0 - t2 * m2 * m3);
    let f21 = 0.5 * (t4 * m2 - t3 * m3) * (1.0 + t2 * m2 * m3);
    let f = Mat2::new(f11, f12, f21, -f11);
    Ok(Triple { h, e, f })
}

/// The variant whose `Ad` reproduces the closed forms best, with the residual.
pub fn closed_form_variant(z: Complex64, tau: &ModularParam) -> Result<(OmegaVariant, f64)> {
    let closed = hef_closed(z, tau)?;
    let mut best = (OmegaVariant::PLAIN, f64::INFINITY);
    for variant in OmegaVariant::all() {
        let r = hef_variant(z, tau, variant)?.dist(&closed);
        if r < best.1 {
            best = (variant, r);
        }
    }
    Ok(best)
}

/// Equivariance residuals of the triple at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Equivariance {
    /// `X(z+½) − ρ(t₁)X(z)`.
    pub half: f64,
    /// `X(z+τ/2) − ρ(t₂)X(z)`.
    pub half_tau: f64,
    /// `X(z+1) − X(z)` and `X(z+τ) − X(z)`.
    pub periods: f64,
    /// `H(−z) − H(z)`, `E(−z) + E(z)`, `F(−z) + F(z)`.
    pub parity: f64,
    /// Parity composed with both translations:
    /// `X(−z−½−τ/2) = ±ρ(t₁t₂)X(z)` with the parity sign of `X`.
    pub order_eight: f64,
}

impl Equivariance {
    pub fn max(&self) -> f64 {
        [self.half, self.half_tau, self.periods, self.parity, self.order_eight].into_iter().fold(0.0, f64::max)
    }
}

/// Equivariance of `H, E, F` at `z`.
pub fn hef_equivariance(z: Complex64, tau: &ModularParam) -> Result<Equivariance> {
    let t = tau.tau();
    let at = |w: Complex64| hef(w, tau, HefMode::ViaAdOmega);
    let x = at(z)?;
    let rel = |a: &Triple, b: &Triple| a.dist(b) / a.max_abs().max(b.max_abs()).max(1.0);
    let half = rel(&at(z + 0.5)?, &x.map(|m| rho(GroupElem::T1, m)));
    let half_tau = rel(&at(z + t / 2.0)?, &x.map(|m| rho(GroupElem::T2, m)));
    let periods = rel(&at(z + 1.0)?, &x).max(rel(&at(z + t)?, &x));
    let neg = at(-z)?;
    let flipped = Triple { h: x.h, e: -x.e, f: -x.f };
    let parity = rel(&neg, &flipped);
    let g = GroupElem::T1.compose(GroupElem::T2);
    let composite = at(-(z + 0.5 + t / 2.0))?;
    let moved = x.map(|m| rho(g, m));
    let expect = Triple { h: moved.h, e: -moved.e, f: -moved.f };
    let order_eight = rel(&composite, &expect);
    Ok(Equivariance { half, half_tau, periods, parity, order_eight })
}

fn check_on_curve(l: &[Complex64; 3], curve: &CurveParams) -> Result<CurvePoint> {
    CurvePoint::new(*l, curve)
}

/// `(H̃, Ẽ, F̃)` at a curve point, with the branch choices `A`, `B` of `curve`.
pub fn hef_tilde(l: &[Complex64; 3], curve: &CurveParams) -> Result<Triple> {
    let p = check_on_curve(l, curve)?;
    Ok(hef_tilde_unchecked(&p, curve))
}

fn hef_tilde_unchecked(p: &CurvePoint, curve: &CurveParams) -> Triple {
    let [l1, l2, l3] = p.l;
    let (a, b) = (curve.a(), curve.b());
    let r12 = curve.rdiff(1, 2);
    let r13 = curve.rdiff(1, 3);
    let r23 = curve.rdiff(2, 3);
    let d = l2 * l3 / (a * b * r23);
    let h = Mat2::new(d, -l1 * l2 / (a * r23) - l1 * l3 / (b * r23), -l1 * l2 / (a * r23) + l1 * l3 / (b * r23), -d);
    let e = Mat2::new(l1, -a * l2 - b * l3, a * l2 - b * l3, -l1) * 0.5;
    let f11 = -0.5 * l1 * (l2 * l2 + r13) / (r12 * r13);
    let f12 = 0.5 * (-(l2 / a + l3 / b) / r23) * (1.0 - d);
    let f21 = 0.5 * ((l2 / a - l3 / b) / r23) * (1.0 + d);
    Triple { h, e, f: Mat2::new(f11, f12, f21, -f11) }
}

/// `H̃(σ(g)λ) − ρ(g)H̃(λ)` and likewise for `Ẽ`, `F̃`, over `g ∈ D₂`.
pub fn hef_tilde_equivariance(l: &[Complex64; 3], curve: &CurveParams) -> Result<f64> {
    let p = check_on_curve(l, curve)?;
    let x = hef_tilde_unchecked(&p, curve);
    let mut worst = 0.0f64;
    for g in GroupElem::d2() {
        let moved = hef_tilde_unchecked(&p.act(g), curve);
        worst = worst.max(moved.dist(&x.map(|m| rho(g, m))));
    }
    Ok(worst)
}

/// `X_i = v_i·μ_i` and `X_i′ = v_i·μ_jμ_k`.
pub fn x_generators(i: usize, z: Complex64, tau: &ModularParam) -> Result<(Mat2, Mat2)> {
    if !(1..=3).contains(&i) {
        return Err(Error::Precondition(format!("generator index {i} out of range 1..3")));
    }
    let m = mu_all(z, tau)?;
    let (j, k) = (i % 3 + 1, (i + 1) % 3 + 1);
    Ok((v(i) * m[i - 1], v(i) * (m[j - 1] * m[k - 1])))
}

/// Residuals of the current-generator relations at `z`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XRelations {
    /// `[X_i, X_j] − ε_ijk X_k′`.
    pub brackets: f64,
    /// `[X_i, X_j′] − ε_ijk μ_i² X_k`.
    pub mixed: f64,
    /// `X(σ(g)z) − ρ(g)X(z)` for `X ∈ {X_i, X_i′}`.
    pub equivariance: f64,
}

pub fn x_relations(z: Complex64, tau: &ModularParam) -> Result<XRelations> {
    let gens: Vec<(Mat2, Mat2)> = (1..=3).map(|i| x_generators(i, z, tau)).collect::<Result<_>>()?;
    let m = mu_all(z, tau)?;
    let mut brackets = 0.0f64;
    let mut mixed = 0.0f64;
    for i in 1..=3 {
        for j in 1..=3 {
            let mut expect = Mat2::zero();
            let mut expect_mixed = Mat2::zero();
            for k in 1..=3 {
                expect += gens[k - 1].1 * levi_civita(i, j, k);
                expect_mixed += gens[k - 1].0 * (m[i - 1] * m[i - 1] * levi_civita(i, j, k));
            }
            brackets = brackets.max(bracket(&gens[i - 1].0, &gens[j - 1].0).dist(&expect));
            mixed = mixed.max(bracket(&gens[i - 1].0, &gens[j - 1].1).dist(&expect_mixed));
        }
    }
    let mut equivariance = 0.0f64;
    for g in GroupElem::d2() {
        let w = g.translate(z, tau.tau());
        for i in 1..=3 {
            let (a, b) = x_generators(i, w, tau)?;
            let (a0, b0) = gens[i - 1];
            equivariance = equivariance.max(a.dist(&rho(g, &a0))).max(b.dist(&rho(g, &b0)));
        }
    }
    Ok(XRelations { brackets, mixed, equivariance })
}

/// Residuals of the `g(3)` relations at one curve point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct G3Residuals {
    /// `[p_i,[p_j,p_k]]` for `p_i = √−1·v_i·λ_i`.
    pub nested: f64,
    /// `[p_i,[p_i,p_k]] − [p_j,[p_j,p_k]] − (r_j − r_i)p_k`.
    pub quadratic: f64,
    /// The same combination for `X_i = v_i·λ_i`, which carries `(r_i − r_j)`.
    pub quadratic_bare: f64,
    /// Nested brackets of `Q_i = (E_{i4} + E_{4i})·λ_i`.
    pub nested_so31: f64,
    /// Quadratic relation of the `Q_i` with `(r_j − r_i)`.
    pub quadratic_so31: f64,
}

impl G3Residuals {
    pub fn max(&self) -> f64 {
        [self.nested, self.quadratic, self.quadratic_bare, self.nested_so31, self.quadratic_so31]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

/// The three cyclic index triples.
pub const CYCLIC: [(usize, usize, usize); 3] = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];

fn nested_and_quadratic<const N: usize>(
    x: &[Mat<N>; 3],
    (i, j, k): (usize, usize, usize),
    coeff: Complex64,
) -> (f64, f64) {
    let (xi, xj, xk) = (&x[i - 1], &x[j - 1], &x[k - 1]);
    let nested = bracket(xi, &bracket(xj, xk)).max_abs();
    let quad = bracket(xi, &bracket(xi, xk)) - bracket(xj, &bracket(xj, xk)) - *xk * coeff;
    (nested, quad.max_abs())
}

/// Residuals of one `g(3)` relation for a triple of distinct indices.
pub fn g3_relation((i, j, k): (usize, usize, usize), l: &[Complex64; 3], curve: &CurveParams) -> Result<G3Residuals> {
    let mut idx = [i, j, k];
    idx.sort_unstable();
    if idx != [1, 2, 3] {
        return Err(Error::Precondition(format!("({i},{j},{k}) is not a permutation of (1,2,3)")));
    }
    let p = check_on_curve(l, curve)?;
    let bare: [Mat2; 3] = std::array::from_fn(|n| v(n + 1) * p.l[n]);
    let pi: [Mat2; 3] = bare.map(|m| m * I);
    let q: [Mat4; 3] = std::array::from_fn(|n| so31_boost(n + 1) * p.l[n]);
    let rji = curve.rdiff(j, i);
    let (nested, quadratic) = nested_and_quadratic(&pi, (i, j, k), rji);
    let (_, quadratic_bare) = nested_and_quadratic(&bare, (i, j, k), -rji);
    let (nested_so31, quadratic_so31) = nested_and_quadratic(&q, (i, j, k), rji);
    Ok(G3Residuals { nested, quadratic, quadratic_bare, nested_so31, quadratic_so31 })
}

/// `g(3)` residuals over the cyclic triples at `λ(z)` on `curve`.
pub fn g3_relations_numeric(z: Complex64, curve: &CurveParams) -> Result<G3Residuals> {
    let p = curve.point_at(z)?;
    let mut worst =
        G3Residuals { nested: 0.0, quadratic: 0.0, quadratic_bare: 0.0, nested_so31: 0.0, quadratic_so31: 0.0 };
    for t in CYCLIC {
        let r = g3_relation(t, &p.l, curve)?;
        worst.nested = worst.nested.max(r.nested);
        worst.quadratic = worst.quadratic.max(r.quadratic);
        worst.quadratic_bare = worst.quadratic_bare.max(r.quadratic_bare);
        worst.nested_so31 = worst.nested_so31.max(r.nested_so31);
        worst.quadratic_so31 = worst.quadratic_so31.max(r.quadratic_so31);
    }
    Ok(worst)
}

/// Outcome of [`real_form_check`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealForm {
    /// Largest imaginary part of `H(x), E(x), F(x)`.
    pub imag: f64,
    /// Largest imaginary part at `x + τ/2`.
    pub imag_shifted: f64,
    /// `X(x+τ/2) − Ad(T₂)X(x)`.
    pub shifted_equivariance: f64,
    /// Only for `τ = i`.
    pub printed: Option<PrintedForms>,
}

/// Comparison with the explicit `τ = i` forms written with `Γ(3/4)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrintedForms {
    /// Against the forms with off-diagonal `F` factor `1 ∓ μ₂μ₃/(√2α)`.
    pub corrected: f64,
    /// Against the forms with factor `1 ∓ μ₂μ₃`; nonzero in general.
    pub uncorrected: f64,
    /// `max |R₁₂ − α|, |R₂₃ − α|, |R₁₃/2 − α|`.
    pub alpha: f64,
}

/// Reality of the triple at real `x` for `τ = q·i`.
pub fn real_form_check(x: f64, q: f64) -> Result<RealForm> {
    if q.is_nan() || q <= 0.0 {
        return Err(Error::Precondition(format!("real forms need tau = q i with q > 0, got q = {q}")));
    }
    let tau = ModularParam::new(Complex64::new(0.0, q))?;
    let z = Complex64::new(x, 0.0);
    let t = hef(z, &tau, HefMode::ViaAdOmega)?;
    let shifted = hef(z + tau.tau() / 2.0, &tau, HefMode::ViaAdOmega)?;
    let expect = t.map(|m| rho(GroupElem::T2, m));
    let printed = if q == 1.0 { Some(printed_forms(x, &tau, &t)?) } else { None };
    Ok(RealForm {
        imag: t.max_imag(),
        imag_shifted: shifted.max_imag(),
        shifted_equivariance: shifted.dist(&expect),
        printed,
    })
}

fn printed_forms(x: f64, tau: &ModularParam, t: &Triple) -> Result<PrintedForms> {
    let a = alpha();
    let s2 = std::f64::consts::SQRT_2;
    let [m1, m2, m3] = mu_all(Complex64::new(x, 0.0), tau)?;
    let h = Mat2::new(m2 * m3 / s2, -m1 * m2 / s2 - m1 * m3, -m1 * m2 / s2 + m1 * m3, -m2 * m3 / s2) * (1.0 / a);
    let e = Mat2::new(m1, -s2 * m2 - m3, s2 * m2 - m3, -m1) * 0.5;
    let f_with = |c: f64| {
        let f11 = -m1 * m2 * m2 / (2.0 * a) - m1;
        Mat2::new(f11, (-m2 / s2 - m3) * (1.0 - c * m2 * m3), (m2 / s2 - m3) * (1.0 + c * m2 * m3), -f11)
            * (1.0 / (2.0 * a))
    };
    let corrected = Triple { h, e, f: f_with(1.0 / (s2 * a)) }.dist(t);
    let uncorrected = Triple { h, e, f: f_with(1.0) }.dist(t);
    let [r13, r12, r23] = crate::elliptic::natural_differences(tau);
    let alpha = [r12 - a, r23 - a, r13 / 2.0 - a].iter().map(|v| v.norm()).fold(0.0, f64::max);
    Ok(PrintedForms { corrected, uncorrected, alpha })
}

/// `Ω(z̄) − conj(Ω(z))`, relative to `max(1, |Ω|)`.
pub fn omega_conjugation_residual(z: Complex64, tau: &ModularParam) -> Result<f64> {
    let a = omega(z.conj(), tau, OmegaVariant::PLAIN)?;
    let b = omega(z, tau, OmegaVariant::PLAIN)?.conj();
    Ok(a.dist(&b) / a.max_abs().max(1.0))
}

/// Punctures `p₀ = 0, p₁, …` whose pairwise differences avoid `½Λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct PunctureSet {
    points: Vec<Complex64>,
}

impl PunctureSet {
    pub fn new(points: Vec<Complex64>, tau: &ModularParam) -> Result<Self> {
        let half = Lattice::unit(tau.tau())?.half();
        for (a, &p) in points.iter().enumerate() {
            for &q in &points[..a] {
                if half.distance(p - q) < 1e-10 {
                    return Err(Error::Precondition(format!("punctures {q} and {p} differ by a half period")));
                }
            }
        }
        Ok(PunctureSet { points })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::sampling::Sampler;

    fn points(tau: &ModularParam, n: usize, seed: u64) -> Vec<Complex64> {
        let mut rng = Sampler::new(seed);
        let half = Lattice::unit(tau.tau()).unwrap().half();
        (0..n).map(|_| rng.avoiding(tau.tau(), &half, &[c64(0.0, 0.0)], 5e-2)).collect()
    }

    #[test]
    fn alpha_value() {
        assert!((alpha() - 0.847_213_084_793_979).abs() < 1e-14);
    }

    #[test]
    fn triples_satisfy_sl2() {
        for tau in [c64(0.0, 1.0), c64(0.0, 2.0), c64(0.3, 0.9)] {
            let tau = ModularParam::new(tau).unwrap();
            for z in points(&tau, 30, 1) {
                for mode in [HefMode::ViaAdOmega, HefMode::ClosedForm, HefMode::Intrinsic] {
                    let t = hef(z, &tau, mode).unwrap();
                    assert!(t.sl2_defect() < 1e-10, "{mode:?} {z}: {}", t.sl2_defect());
                    assert!(t.trace_defect() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn closed_form_is_plain_variant() {
        let tau = ModularParam::new(c64(0.3, 0.9)).unwrap();
        for z in points(&tau, 10, 2) {
            let (variant, r) = closed_form_variant(z, &tau).unwrap();
            assert_eq!(variant, OmegaVariant::PLAIN);
            assert!(r < 1e-9);
            let intrinsic = hef(z, &tau, HefMode::Intrinsic).unwrap();
            assert!(intrinsic.dist(&hef(z, &tau, HefMode::ViaAdOmega).unwrap()) < 1e-8);
        }
    }

    #[test]
    fn equivariance_laws() {
        let tau = ModularParam::new(c64(0.0, 2.0)).unwrap();
        for z in points(&tau, 20, 3) {
            let r = hef_equivariance(z, &tau).unwrap();
            assert!(r.max() < 1e-10, "{z}: {r:?}");
        }
    }

    #[test]
    fn tilde_forms_all_branches() {
        let curve = CurveParams::from_reals([0.0, 1.0, 3.0]).unwrap();
        let mut rng = Sampler::new(4);
        for _ in 0..20 {
            let p = curve.sample_point(&mut rng);
            for (fa, fb) in [(false, false), (true, false), (false, true), (true, true)] {
                let c = curve.with_branch_signs(fa, fb);
                let t = hef_tilde(&p.l, &c).unwrap();
                assert!(t.sl2_defect() < 1e-10 * t.max_abs().powi(2).max(1.0));
                assert!(hef_tilde_equivariance(&p.l, &c).unwrap() < 1e-12 * t.max_abs().max(1.0));
            }
        }
        let mut off = curve.sample_point(&mut rng).l;
        off[1] += 0.01;
        assert!(matches!(hef_tilde(&off, &curve), Err(Error::OffCurve { .. })));
    }

    #[test]
    fn current_generators() {
        let tau = ModularParam::new(c64(0.2, 1.1)).unwrap();
        for z in points(&tau, 20, 5) {
            let r = x_relations(z, &tau).unwrap();
            let (x1, _) = x_generators(1, z, &tau).unwrap();
            assert_eq!(bracket(&x1, &x1).max_abs(), 0.0);
            assert!(r.brackets < 1e-12 && r.mixed < 1e-10 && r.equivariance < 1e-10, "{r:?}");
        }
        assert!(x_generators(4, c64(0.1, 0.1), &tau).is_err());
    }

    #[test]
    fn g3_numeric() {
        for r in [[2.0, 1.0, 0.0], [0.0, 1.0, 3.0]] {
            let curve = CurveParams::from_reals(r).unwrap();
            for z in points(curve.tau(), 20, 6) {
                let g = g3_relations_numeric(z, &curve).unwrap();
                assert!(g.max() < 1e-9, "{g:?}");
            }
        }
        let curve = CurveParams::from_reals([2.0, 1.0, 0.0]).unwrap();
        let p = curve.point_at(c64(0.1, 0.2)).unwrap();
        assert!(g3_relation((1, 1, 2), &p.l, &curve).is_err());
    }

    #[test]
    fn real_forms_at_i() {
        for x in [0.3, 0.11, -0.37] {
            let r = real_form_check(x, 1.0).unwrap();
            assert!(r.imag < 1e-10 && r.imag_shifted < 1e-10 && r.shifted_equivariance < 1e-10, "{r:?}");
            let p = r.printed.unwrap();
            assert!(p.corrected < 1e-10 && p.alpha < 1e-10, "{p:?}");
            assert!(p.uncorrected > 1e-3);
        }
        assert!(real_form_check(0.3, 2.0).unwrap().printed.is_none());
        assert!(real_form_check(0.3, -1.0).is_err());
        let tau = ModularParam::new(c64(0.0, 2.0)).unwrap();
        assert!(omega_conjugation_residual(c64(0.21, 0.33), &tau).unwrap() < 1e-12);
    }

    #[test]
    fn puncture_sets() {
        let tau = ModularParam::new(c64(0.0, 2.0)).unwrap();
        assert!(PunctureSet::new(vec![c64(0.0, 0.0), c64(0.3, 0.2)], &tau).is_ok());
        assert!(PunctureSet::new(vec![c64(0.0, 0.0), c64(0.5, 1.0)], &tau).is_err());
    }
}
