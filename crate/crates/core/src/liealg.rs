//! Small matrix Lie algebras, the group `He₂` and its representations.

use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::I;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense `N×N` complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat<const N: usize>(pub [[Complex64; N]; N]);

pub type Mat2 = Mat<2>;
pub type Mat4 = Mat<4>;

impl<const N: usize> Mat<N> {
    pub fn zero() -> Self {
        Mat([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn diag(d: [Complex64; N]) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i][i] = d[i];
        }
        m
    }

    /// The elementary matrix `E_{ij}` (zero-based indices).
    pub fn unit(i: usize, j: usize) -> Self {
        let mut m = Self::zero();
        m.0[i][j] = ONE;
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    pub fn conj(&self) -> Self {
        Mat(self.0.map(|row| row.map(|v| v.conj())))
    }

    pub fn trace(&self) -> Complex64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest imaginary-part modulus over the entries.
    pub fn max_imag(&self) -> f64 {
        self.0.iter().flatten().map(|v| v.im.abs()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Mat(self.0.map(|row| row.map(|v| v * s)))
    }

    pub fn dist(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }
}

impl<const N: usize> Default for Mat<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> Index<(usize, usize)> for Mat<N> {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for Mat<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Add for Mat<N> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.0[i][j] += o.0[i][j];
            }
        }
        self
    }
}

impl<const N: usize> AddAssign for Mat<N> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<const N: usize> Sub for Mat<N> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<const N: usize> Neg for Mat<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Mat(self.0.map(|row| row.map(|v| -v)))
    }
}

impl<const N: usize> Mul for Mat<N> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                for j in 0..N {
                    m.0[i][j] += a * o.0[k][j];
                }
            }
        }
        m
    }
}

impl<const N: usize> Mul<Complex64> for Mat<N> {
    type Output = Self;
    fn mul(self, s: Complex64) -> Self {
        self.scale(s)
    }
}

impl<const N: usize> Mul<Mat<N>> for Complex64 {
    type Output = Mat<N>;
    fn mul(self, m: Mat<N>) -> Mat<N> {
        m.scale(self)
    }
}

impl<const N: usize> Mul<f64> for Mat<N> {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }
}

impl Mat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat([[a, b], [c, d]])
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// Inverse by the adjugate formula.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.norm() <= 1e-300 || !d.is_finite() {
            return Err(Error::Singular(format!("2x2 determinant {d}")));
        }
        let [[a, b], [c, e]] = self.0;
        Ok(Mat2::new(e, -b, -c, a).scale(1.0 / d))
    }

    /// Coordinates `(a, b, c)` of `a·h + b·e + c·f`.
    pub fn hef_coords(&self) -> [Complex64; 3] {
        [(self.0[0][0] - self.0[1][1]) / 2.0, self.0[0][1], self.0[1][0]]
    }

    pub fn from_hef_coords(c: [Complex64; 3]) -> Self {
        Mat2::new(c[0], c[1], c[2], -c[0])
    }
}

/// `AB − BA`; the dimensions agree by construction.
pub fn bracket<const N: usize>(a: &Mat<N>, b: &Mat<N>) -> Mat<N> {
    *a * *b - *b * *a
}

/// `MAM⁻¹`.
pub fn conjugate(m: &Mat2, a: &Mat2) -> Result<Mat2> {
    Ok(*m * *a * m.inverse()?)
}

/// Standard basis `h, e, f` of `sl(2, ℂ)`.
pub fn sl2_h() -> Mat2 {
    Mat2::diag([ONE, -ONE])
}

pub fn sl2_e() -> Mat2 {
    Mat2::unit(0, 1)
}

pub fn sl2_f() -> Mat2 {
    Mat2::unit(1, 0)
}

/// The basis `v₁, v₂, v₃` with `[v_i, v_j] = ε_ijk v_k`.
pub fn v_basis() -> [Mat2; 3] {
    let half = Complex64::new(0.5, 0.0);
    let mih = -I / 2.0;
    [Mat2::new(mih, ZERO, ZERO, -mih), Mat2::new(ZERO, half, -half, ZERO), Mat2::new(ZERO, mih, mih, ZERO)]
}

/// `v_i` for `i ∈ 1..=3`.
pub fn v(i: usize) -> Mat2 {
    v_basis()[i - 1]
}

/// Totally antisymmetric symbol on `1..=3`.
pub fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (1, 3, 2) | (3, 2, 1) | (2, 1, 3) => -1.0,
        _ => 0.0,
    }
}

/// The third index of a pair of distinct indices in `1..=3`.
pub fn third(i: usize, j: usize) -> usize {
    6 - i - j
}

/// Matrix of `Ad(M)` in the basis `{h, e, f}`.
pub fn ad_matrix(m: &Mat2) -> Result<[[Complex64; 3]; 3]> {
    let d = m.det();
    if d.norm() <= 1e-300 {
        return Err(Error::Singular("ad_matrix of a singular matrix".into()));
    }
    let [[a, b], [c, e]] = m.0;
    let r = [[b * c + a * e, -a * c, b * e], [-2.0 * a * b, a * a, -b * b], [2.0 * c * e, -c * c, e * e]];
    Ok(r.map(|row| row.map(|v| v / d)))
}

/// `E_{i4} + E_{4i}` for `i ∈ 1..=3`.
pub fn so31_boost(i: usize) -> Mat4 {
    Mat4::unit(i - 1, 3) + Mat4::unit(3, i - 1)
}

/// `E_{ij} − E_{ji}` for `i, j ∈ 1..=3`.
pub fn so31_rotation(i: usize, j: usize) -> Mat4 {
    Mat4::unit(i - 1, j - 1) - Mat4::unit(j - 1, i - 1)
}

/// `I₃,₁ = diag(1, 1, 1, −1)`.
pub fn i31() -> Mat4 {
    Mat4::diag([ONE, ONE, ONE, -ONE])
}

/// `|Xᵗ I₃,₁ + I₃,₁ X|`.
pub fn so31_defect(x: &Mat4) -> f64 {
    (x.transpose() * i31() + i31() * *x).max_abs()
}

/// An element `t₁^a t₂^b ε^c` of `He₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElem {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

impl GroupElem {
    pub const ONE: GroupElem = GroupElem { a: false, b: false, c: false };
    pub const T1: GroupElem = GroupElem { a: true, b: false, c: false };
    pub const T2: GroupElem = GroupElem { a: false, b: true, c: false };
    pub const EPS: GroupElem = GroupElem { a: false, b: false, c: true };

    pub fn new(a: bool, b: bool, c: bool) -> Self {
        GroupElem { a, b, c }
    }

    /// All eight elements of `He₂`.
    pub fn all() -> Vec<GroupElem> {
        (0..8).map(|n| GroupElem::new(n & 1 == 1, n & 2 == 2, n & 4 == 4)).collect()
    }

    /// Representatives `1, t₁, t₂, t₁t₂` of `D₂ = He₂/⟨ε⟩`.
    pub fn d2() -> Vec<GroupElem> {
        (0..4).map(|n| GroupElem::new(n & 1 == 1, n & 2 == 2, false)).collect()
    }

    /// Product in normal form, using `t₂t₁ = t₁t₂ε`.
    pub fn compose(self, o: GroupElem) -> GroupElem {
        GroupElem { a: self.a ^ o.a, b: self.b ^ o.b, c: self.c ^ o.c ^ (self.b & o.a) }
    }

    pub fn inverse(self) -> GroupElem {
        GroupElem::all().into_iter().find(|g| self.compose(*g) == GroupElem::ONE).expect("finite group")
    }

    /// Image in `D₂`.
    pub fn project(self) -> GroupElem {
        GroupElem { c: false, ..self }
    }

    /// `σ(g)z`: `t₁` translates by `½`, `t₂` by `τ/2`.
    pub fn translate(self, z: Complex64, tau: Complex64) -> Complex64 {
        let mut w = z;
        if self.a {
            w += 0.5;
        }
        if self.b {
            w += tau / 2.0;
        }
        w
    }

    /// Signs of `σ(g)` on `(λ₁, λ₂, λ₃)`.
    pub fn curve_signs(self) -> [f64; 3] {
        let mut s = [1.0; 3];
        if self.a {
            s[1] = -s[1];
            s[2] = -s[2];
        }
        if self.b {
            s[0] = -s[0];
            s[1] = -s[1];
        }
        s
    }

    /// `ρ′(g) = T₁^a T₂^b (−1)^c` with `T₁ = diag(1,−1)`, `T₂` the swap.
    pub fn rho_prime(self) -> Mat2 {
        let mut m = Mat2::identity();
        if self.a {
            m = m * t1();
        }
        if self.b {
            m = m * t2();
        }
        if self.c {
            m = -m;
        }
        m
    }

    /// Diagonal matrix `S` with `ρ̃(g) = Ad(S)`.
    pub fn rho_tilde_matrix(self) -> Mat4 {
        let mut d = [ONE; 4];
        if self.a {
            d[1] = -d[1];
            d[2] = -d[2];
        }
        if self.b {
            d[2] = -d[2];
            d[3] = -d[3];
        }
        Mat4::diag(d)
    }
}

/// `T₁ = diag(1, −1)`.
pub fn t1() -> Mat2 {
    Mat2::diag([ONE, -ONE])
}

/// `T₂ = [[0, 1], [1, 0]]`.
pub fn t2() -> Mat2 {
    Mat2::new(ZERO, ONE, ONE, ZERO)
}

/// Character `α_ij(t₁^a t₂^b) = (−1)^{ia + jb}` of `D₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct D2Character {
    pub i: u8,
    pub j: u8,
}

impl D2Character {
    pub fn new(i: u8, j: u8) -> Self {
        assert!(i < 2 && j < 2, "character indices are bits");
        D2Character { i, j }
    }

    pub fn all() -> [D2Character; 4] {
        [Self::new(0, 0), Self::new(1, 0), Self::new(0, 1), Self::new(1, 1)]
    }

    pub fn value(&self, g: GroupElem) -> f64 {
        let e = (self.i as u32 * g.a as u32) + (self.j as u32 * g.b as u32);
        if e.is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }
}

/// Representations of `He₂` used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rep {
    /// Matrix multiplication on `ℂ²`-valued objects.
    RhoPrime,
    /// Conjugation by `ρ′` on `sl(2)`.
    Rho,
    /// Conjugation by sign matrices on `so(3,1)`.
    RhoTilde,
}

impl std::str::FromStr for Rep {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rho_prime" => Ok(Rep::RhoPrime),
            "rho" => Ok(Rep::Rho),
            "rho_tilde" => Ok(Rep::RhoTilde),
            other => Err(Error::Precondition(format!("unknown representation `{other}`"))),
        }
    }
}

/// Objects on which the representations act.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Operand {
    Vec2([Complex64; 2]),
    Mat2(Mat2),
    Mat4(Mat4),
}

/// Applies `rep(g)` to `x`.
pub fn rep_apply(rep: Rep, g: GroupElem, x: Operand) -> Result<Operand> {
    match (rep, x) {
        (Rep::RhoPrime, Operand::Vec2(v)) => {
            let m = g.rho_prime();
            Ok(Operand::Vec2([m[(0, 0)] * v[0] + m[(0, 1)] * v[1], m[(1, 0)] * v[0] + m[(1, 1)] * v[1]]))
        }
        (Rep::RhoPrime, Operand::Mat2(a)) => Ok(Operand::Mat2(g.rho_prime() * a)),
        (Rep::Rho, Operand::Mat2(a)) => Ok(Operand::Mat2(rho(g, &a))),
        (Rep::RhoTilde, Operand::Mat4(a)) => Ok(Operand::Mat4(rho_tilde(g, &a))),
        (rep, x) => Err(Error::Shape(format!("{rep:?} cannot act on {}", operand_kind(&x)))),
    }
}

fn operand_kind(x: &Operand) -> &'static str {
    match x {
        Operand::Vec2(_) => "a vector in C^2",
        Operand::Mat2(_) => "a 2x2 matrix",
        Operand::Mat4(_) => "a 4x4 matrix",
    }
}

/// `ρ(g)A = ρ′(g)·A·ρ′(g)⁻¹`.
pub fn rho(g: GroupElem, a: &Mat2) -> Mat2 {
    let m = g.rho_prime();
    // ρ′(g) is ± a signed permutation with ρ′(g)² = ±1, so its inverse is explicit
    m * *a * m.inverse().expect("rho_prime is invertible")
}

/// `ρ̃(g)X = S·X·S` with `S` the diagonal sign matrix of `g`.
pub fn rho_tilde(g: GroupElem, x: &Mat4) -> Mat4 {
    let s = g.rho_tilde_matrix();
    s * *x * s
}

/// Splits `X ∈ so(3,1)⊗ℂ` into two `sl(2, ℂ)` components through
/// `so(4, ℂ) ≅ sl(2) ⊕ sl(2)`.
///
/// With `D = diag(1, 1, 1, i)`, `Y = DXD⁻¹` is antisymmetric. Writing
/// `Y = Σ l_k L_k + κ_k K_k` in rotations `L_k` and boosts `K_k = E_{k4} − E_{4k}`,
/// the components are `Σ (l_k + κ_k) v_k` and `Σ (l_k − κ_k) v_k`.
pub fn so31_split(x: &Mat4) -> Result<(Mat2, Mat2)> {
    let size = x.max_abs().max(1.0);
    if so31_defect(x) > 1e-12 * size {
        return Err(Error::Precondition("matrix is not in so(3,1)".into()));
    }
    let d = Mat4::diag([ONE, ONE, ONE, I]);
    let dinv = Mat4::diag([ONE, ONE, ONE, -I]);
    let y = d * *x * dinv;
    let l = [y[(2, 1)], y[(0, 2)], y[(1, 0)]];
    let k = [y[(0, 3)], y[(1, 3)], y[(2, 3)]];
    let vb = v_basis();
    let mut plus = Mat2::zero();
    let mut minus = Mat2::zero();
    for n in 0..3 {
        plus += vb[n] * (l[n] + k[n]);
        minus += vb[n] * (l[n] - k[n]);
    }
    Ok((plus, minus))
}
