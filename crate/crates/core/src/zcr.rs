//! Lax pair of the three-component Landau–Lifshitz system and a numeric
//! check of its zero-curvature identity on constrained jets.

use num_complex::Complex64;

use crate::c64;
use crate::elliptic::{CurveParams, CurvePoint};
use crate::error::{Error, Result};
use crate::liealg::{bracket, so31_boost, Mat4};
use crate::sampling::Sampler;

type V3 = [Complex64; 3];

/// Coefficient field of a sampled jet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

/// Values of `S, S_x, S_xx, S_xxx` at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JetPoint {
    pub s: V3,
    pub sx: V3,
    pub sxx: V3,
    pub sxxx: V3,
}

/// `⟨V, W⟩ = Σ V_i W_i`, bilinear.
pub fn dot(a: &V3, b: &V3) -> Complex64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn axpy(a: Complex64, x: &V3, y: &V3) -> V3 {
    std::array::from_fn(|i| a * x[i] + y[i])
}

impl JetPoint {
    /// Validates the unit-length constraint and its first three derivatives.
    pub fn new(s: V3, sx: V3, sxx: V3, sxxx: V3) -> Result<Self> {
        let j = JetPoint { s, sx, sxx, sxxx };
        let worst = j.constraint_defects().into_iter().fold(0.0, f64::max);
        if worst < 1e-12 {
            Ok(j)
        } else {
            Err(Error::Precondition(format!("jet violates the unit constraint by {worst:e}")))
        }
    }

    pub fn new_unchecked(s: V3, sx: V3, sxx: V3, sxxx: V3) -> Self {
        JetPoint { s, sx, sxx, sxxx }
    }

    /// The constant jet at `s`.
    pub fn constant(s: V3) -> Self {
        let z = [c64(0.0, 0.0); 3];
        JetPoint { s, sx: z, sxx: z, sxxx: z }
    }

    /// `|⟨S,S⟩ − 1|`, `|⟨S,S_x⟩|`, `|⟨S,S_xx⟩ + ⟨S_x,S_x⟩|`, `|⟨S,S_xxx⟩ + 3⟨S_x,S_xx⟩|`.
    pub fn constraint_defects(&self) -> [f64; 4] {
        let (s, sx, sxx, sxxx) = (&self.s, &self.sx, &self.sxx, &self.sxxx);
        [
            (dot(s, s) - 1.0).norm(),
            dot(s, sx).norm(),
            (dot(s, sxx) + dot(sx, sx)).norm(),
            (dot(s, sxxx) + 3.0 * dot(sx, sxx)).norm(),
        ]
    }

    pub fn is_real(&self) -> bool {
        [self.s, self.sx, self.sxx, self.sxxx].iter().flatten().all(|v| v.im == 0.0)
    }

    /// `S_t = S_xxx + 3⟨S_x,S_xx⟩S + 3/2⟨S_x,S_x⟩S_x + 3/2⟨S,RS⟩S_x`.
    pub fn s_t(&self, r: &V3) -> V3 {
        let rs = std::array::from_fn(|i| r[i] * self.s[i]);
        let a = 3.0 * dot(&self.sx, &self.sxx);
        let b = 1.5 * dot(&self.sx, &self.sx) + 1.5 * dot(&self.s, &rs);
        std::array::from_fn(|i| self.sxxx[i] + a * self.s[i] + b * self.sx[i])
    }
}

fn draw(rng: &mut Sampler, field: Field) -> V3 {
    std::array::from_fn(|_| match field {
        Field::Real => c64(rng.normal(), 0.0),
        Field::Complex => rng.complex_normal(),
    })
}

/// A jet with `⟨S,S⟩ = norm_sq` whose derivatives satisfy the
/// differentiated constraints for that norm.
fn jet_with_norm(seed: u64, field: Field, norm_sq: f64) -> JetPoint {
    let mut rng = Sampler::new(seed);
    let s = loop {
        let s = draw(&mut rng, field);
        let n2 = dot(&s, &s);
        if n2.norm() > 1e-3 {
            let k = (Complex64::from(norm_sq) / n2).sqrt();
            break s.map(|v| v * k);
        }
    };
    let ss = dot(&s, &s);
    let raw = draw(&mut rng, field);
    let sx = axpy(-dot(&s, &raw) / ss, &s, &raw);
    let raw = draw(&mut rng, field);
    let sxx = axpy(-(dot(&sx, &sx) + dot(&s, &raw)) / ss, &s, &raw);
    let raw = draw(&mut rng, field);
    let sxxx = axpy(-(3.0 * dot(&sx, &sxx) + dot(&s, &raw)) / ss, &s, &raw);
    JetPoint { s, sx, sxx, sxxx }
}

/// A seeded jet on the constraint manifold `⟨S,S⟩ = 1`.
pub fn sample_jet(seed: u64, field: Field) -> JetPoint {
    jet_with_norm(seed, field, 1.0)
}

/// Like [`sample_jet`] but with `⟨S,S⟩ = norm_sq`, for negative controls.
pub fn broken_jet(seed: u64, field: Field, norm_sq: f64) -> JetPoint {
    jet_with_norm(seed, field, norm_sq)
}

/// A curve point with the given `λ₁`, solving `λ_j² = λ₁² + r₁ − r_j` with
/// principal roots, negated where `flip` says so.
pub fn algebraic_point(l1: Complex64, flip: [bool; 2], curve: &CurveParams) -> CurvePoint {
    let r = curve.r();
    let root = |j: usize, f: bool| {
        let v = (l1 * l1 + r[0] - r[j]).sqrt();
        if f {
            -v
        } else {
            v
        }
    };
    CurvePoint::new_unchecked([l1, root(1, flip[0]), root(2, flip[1])])
}

/// `|(r₁ + λ₁²) − (r_i + λ_i²)|` over `i`, relative to `max(1, |λ|²)`.
pub fn central_consistency(p: &CurvePoint, curve: &CurveParams) -> f64 {
    let r = curve.r();
    let size = p.l.iter().map(|v| v.norm_sqr()).fold(1.0, f64::max);
    let c = r[0] + p.l[0] * p.l[0];
    (1..3).map(|i| (c - r[i] - p.l[i] * p.l[i]).norm() / size).fold(0.0, f64::max)
}

fn check_point(p: &CurvePoint, curve: &CurveParams) -> Result<()> {
    let residual = central_consistency(p, curve);
    if residual < 1e-10 {
        Ok(())
    } else {
        Err(Error::OffCurve { residual })
    }
}

fn m_of(v: &V3, l: &V3) -> Mat4 {
    (1..=3).fold(Mat4::zero(), |acc, i| acc + so31_boost(i) * (v[i - 1] * l[i - 1]))
}

/// `M = Σ (E_{i4} + E_{4i}) s^i λ_i`.
pub fn lax_m(jet: &JetPoint, p: &CurvePoint) -> Mat4 {
    m_of(&jet.s, &p.l)
}

struct Terms {
    n: Mat4,
    dx_n: Mat4,
    dt_m: Mat4,
    m: Mat4,
}

fn terms(jet: &JetPoint, l: &V3, r: &V3) -> Terms {
    let (m, m1, m2, m3) = (m_of(&jet.s, l), m_of(&jet.sx, l), m_of(&jet.sxx, l), m_of(&jet.sxxx, l));
    let rs: V3 = std::array::from_fn(|i| r[i] * jet.s[i]);
    let f = r[0] + l[0] * l[0] + 0.5 * dot(&jet.s, &rs) + 1.5 * dot(&jet.sx, &jet.sx);
    let fx = dot(&jet.sx, &rs) + 3.0 * dot(&jet.sx, &jet.sxx);
    let n = m2 + bracket(&m1, &m) + m * f;
    // D_x[M₁, M] = [M₂, M] since [M₁, M₁] = 0
    let dx_n = m3 + bracket(&m2, &m) + m1 * f + m * fx;
    let dt_m = m_of(&jet.s_t(r), l);
    Terms { n, dx_n, dt_m, m }
}

/// `N = D_x²M + [D_xM, M] + M·(r₁ + λ₁² + ½⟨S,RS⟩ + 3/2⟨S_x,S_x⟩)`.
pub fn lax_n(jet: &JetPoint, p: &CurvePoint, curve: &CurveParams) -> Result<Mat4> {
    check_point(p, curve)?;
    Ok(terms(jet, &p.l, &curve.r()).n)
}

/// Size of `D_xN − D_tM + [M,N]` and of its largest term.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZcrResidual {
    pub abs: f64,
    pub scale: f64,
}

impl ZcrResidual {
    pub fn relative(&self) -> f64 {
        if self.scale == 0.0 {
            self.abs
        } else {
            self.abs / self.scale
        }
    }
}

/// Evaluates the zero-curvature defect at one jet and curve point.
pub fn zcr_residual(jet: &JetPoint, p: &CurvePoint, curve: &CurveParams) -> Result<ZcrResidual> {
    check_point(p, curve)?;
    let t = terms(jet, &p.l, &curve.r());
    let mn = bracket(&t.m, &t.n);
    let abs = (t.dx_n - t.dt_m + mn).max_abs();
    let scale = [t.dx_n.max_abs(), t.dt_m.max_abs(), mn.max_abs()].into_iter().fold(0.0, f64::max);
    Ok(ZcrResidual { abs, scale })
}

/// Largest relative residual over `jets` jets times `points` algebraic curve
/// points, seeds derived from `seed`.
pub fn zcr_sweep(curve: &CurveParams, jets: usize, points: usize, field: Field, seed: u64) -> Result<f64> {
    let mut rng = Sampler::new(seed);
    let pts: Vec<CurvePoint> = (0..points).map(|_| curve.sample_point(&mut rng)).collect();
    let mut worst = 0.0f64;
    for k in 0..jets {
        let jet = sample_jet(seed.wrapping_add(1 + k as u64), field);
        for p in &pts {
            worst = worst.max(zcr_residual(&jet, p, curve)?.relative());
        }
    }
    Ok(worst)
}

/// Smallest and largest relative residual over jets with `⟨S,S⟩ = norm_sq`,
/// drawn as in [`zcr_sweep`].
pub fn broken_sweep(curve: &CurveParams, jets: usize, points: usize, norm_sq: f64, seed: u64) -> Result<(f64, f64)> {
    let mut rng = Sampler::new(seed);
    let pts: Vec<CurvePoint> = (0..points).map(|_| curve.sample_point(&mut rng)).collect();
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for k in 0..jets {
        let jet = broken_jet(seed.wrapping_add(1 + k as u64), Field::Real, norm_sq);
        for p in &pts {
            let r = zcr_residual(&jet, p, curve)?.relative();
            lo = lo.min(r);
            hi = hi.max(r);
        }
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{rho_tilde, so31_defect, GroupElem};

    fn curves() -> Vec<CurveParams> {
        vec![CurveParams::from_reals([2.0, 1.0, 0.0]).unwrap(), CurveParams::from_reals([0.0, 1.0, 3.0]).unwrap()]
    }

    #[test]
    fn sampled_jets_are_constrained() {
        for seed in 0..50 {
            for field in [Field::Real, Field::Complex] {
                let j = sample_jet(seed, field);
                assert!(j.constraint_defects().iter().all(|&d| d < 1e-12), "{j:?}");
                assert_eq!(j, sample_jet(seed, field));
            }
            assert!(sample_jet(seed, Field::Real).is_real());
        }
        assert!(JetPoint::new(
            sample_jet(3, Field::Real).s,
            [c64(0.0, 0.0); 3],
            [c64(0.0, 0.0); 3],
            [c64(0.0, 0.0); 3]
        )
        .is_ok());
        let b = broken_jet(3, Field::Real, 1.1);
        assert!(JetPoint::new(b.s, b.sx, b.sxx, b.sxxx).is_err());
    }

    #[test]
    fn m_examples() {
        let curve = &curves()[0];
        let mut rng = Sampler::new(1);
        let p = curve.sample_point(&mut rng);
        let one = c64(1.0, 0.0);
        let zero = c64(0.0, 0.0);
        let jet = JetPoint::constant([one, zero, zero]);
        assert!(lax_m(&jet, &p).dist(&(so31_boost(1) * p.l[0])) == 0.0);
        let jet = sample_jet(4, Field::Complex);
        let m = lax_m(&jet, &p);
        assert!(so31_defect(&m) < 1e-14);
        assert!(
            so31_defect(&lax_n(&jet, &p, curve).unwrap()) < 1e-12 * lax_n(&jet, &p, curve).unwrap().max_abs().max(1.0)
        );
        let q = p.act(GroupElem::T1);
        assert!(lax_m(&jet, &q).dist(&rho_tilde(GroupElem::T1, &m)) < 1e-14);
        let q = p.act(GroupElem::T2);
        assert!(lax_m(&jet, &q).dist(&rho_tilde(GroupElem::T2, &m)) < 1e-14);
    }

    #[test]
    fn constant_jet() {
        for curve in curves() {
            let mut rng = Sampler::new(2);
            let p = curve.sample_point(&mut rng);
            let j = JetPoint::constant(sample_jet(9, Field::Real).s);
            let r = curve.r();
            let rs: V3 = std::array::from_fn(|i| r[i] * j.s[i]);
            let expect = lax_m(&j, &p) * (r[0] + p.l[0] * p.l[0] + 0.5 * dot(&j.s, &rs));
            assert!(lax_n(&j, &p, &curve).unwrap().dist(&expect) < 1e-13);
            assert!(zcr_residual(&j, &p, &curve).unwrap().abs < 1e-13);
        }
    }

    #[test]
    fn identity_holds_on_constraint_manifold() {
        for curve in curves() {
            for field in [Field::Real, Field::Complex] {
                let worst = zcr_sweep(&curve, 50, 10, field, 17).unwrap();
                assert!(worst < 1e-8, "{worst:e}");
            }
        }
    }

    #[test]
    fn broken_constraint_is_detected() {
        for curve in curves() {
            let mut rng = Sampler::new(5);
            let p = curve.sample_point(&mut rng);
            let j = broken_jet(6, Field::Real, 1.1);
            assert!(zcr_residual(&j, &p, &curve).unwrap().relative() > 1e-4);
            let (lo, hi) = broken_sweep(&curve, 50, 10, 1.1, 7).unwrap();
            assert!(hi > 1e-2 && lo > 1e-5, "{lo:e} {hi:e}");
        }
    }

    #[test]
    fn off_curve_point_rejected() {
        let curve = &curves()[0];
        let p = CurvePoint::new_unchecked([c64(1.0, 0.0), c64(1.0, 0.0), c64(1.0, 0.0)]);
        assert!(matches!(zcr_residual(&sample_jet(0, Field::Real), &p, curve), Err(Error::OffCurve { .. })));
    }

    #[test]
    fn d2_invariance() {
        for curve in curves() {
            let mut rng = Sampler::new(8);
            for k in 0..10 {
                let p = curve.sample_point(&mut rng);
                let j = sample_jet(k, Field::Complex);
                let base = zcr_residual(&j, &p, &curve).unwrap();
                for g in GroupElem::d2() {
                    let other = zcr_residual(&j, &p.act(g), &curve).unwrap();
                    assert!((other.abs - base.abs).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn uniformized_points_agree_with_algebraic() {
        let curve = curves()[0];
        let mut rng = Sampler::new(12);
        let lattice = crate::elliptic::Lattice::unit(curve.tau().tau()).unwrap();
        for k in 0..10 {
            let z = rng.avoiding(curve.tau().tau(), &lattice.half(), &[], 0.1);
            let p = curve.point_at(z).unwrap();
            let q = [[false, false], [false, true], [true, false], [true, true]]
                .into_iter()
                .map(|f| algebraic_point(p.l[0], f, &curve))
                .min_by(|a, b| {
                    let d = |x: &CurvePoint| (0..3).map(|i| (x.l[i] - p.l[i]).norm()).sum::<f64>();
                    d(a).total_cmp(&d(b))
                })
                .unwrap();
            assert!(central_consistency(&p, &curve) < 1e-10);
            let j = sample_jet(k, Field::Real);
            let (a, b) = (zcr_residual(&j, &p, &curve).unwrap(), zcr_residual(&j, &q, &curve).unwrap());
            assert!((a.relative() - b.relative()).abs() < 1e-9);
        }
    }

    #[test]
    fn superposition() {
        let curve = &curves()[0];
        let mut rng = Sampler::new(3);
        let p = curve.sample_point(&mut rng);
        let (a, b) = (sample_jet(1, Field::Real), sample_jet(2, Field::Real));
        let (x, y) = (c64(0.7, 0.0), c64(-1.3, 0.0));
        let mix = JetPoint::constant(std::array::from_fn(|i| x * a.s[i] + y * b.s[i]));
        let lhs = lax_m(&mix, &p);
        let rhs = lax_m(&a, &p) * x + lax_m(&b, &p) * y;
        assert!(lhs.dist(&rhs) < 1e-13);

        // N ignores S_xxx and is affine in S_xx
        let mut j = a;
        j.sxxx = b.s;
        let n0 = lax_n(&a, &p, curve).unwrap();
        assert!(lax_n(&j, &p, curve).unwrap().dist(&n0) == 0.0);
        let shift = |t: f64| {
            let mut j = a;
            j.sxx = std::array::from_fn(|i| a.sxx[i] + b.sx[i] * t);
            lax_n(&j, &p, curve).unwrap()
        };
        let second = shift(1.0) * c64(-2.0, 0.0) + shift(0.0) + shift(2.0);
        assert!(second.max_abs() < 1e-12 * n0.max_abs().max(1.0));
    }

    #[test]
    fn n_is_cubic_in_lambda() {
        // scale λ off the curve: N(tλ) is a polynomial of degree ≤ 3 in t,
        // so its fourth finite difference vanishes
        let curve = &curves()[1];
        let mut rng = Sampler::new(21);
        let p = curve.sample_point(&mut rng);
        let j = sample_jet(5, Field::Complex);
        let r = curve.r();
        let n_at = |t: f64| terms(&j, &p.l.map(|v| v * t), &r).n;
        let w = [1.0, -4.0, 6.0, -4.0, 1.0];
        let fourth = (0..5).fold(Mat4::zero(), |acc, k| acc + n_at(0.5 + k as f64 * 0.25) * w[k]);
        let size = n_at(1.5).max_abs();
        assert!(fourth.max_abs() < 1e-12 * size, "{:e}", fourth.max_abs() / size);
        let third = (0..4).fold(Mat4::zero(), |acc, k| acc + n_at(0.5 + k as f64 * 0.25) * [-1.0, 3.0, -3.0, 1.0][k]);
        assert!(third.max_abs() > 1e-6 * size);
    }
}
