//! Exact arithmetic in `ℂ[λ₁,λ₂,λ₃]/(λ_i² − λ_j² + r_i − r_j)`.
//!
//! An element is stored as eight polynomials in the central variable
//! `x = λ_i² + r_i`, one per square-free monomial `λ^ε`, `ε ∈ {0,1}³`.
//! Coefficients are Gaussian rationals. Multiplication uses
//! `λ^ε·λ^δ = λ^{ε⊕δ}·Π_{i∈ε∧δ}(x − r_i)`.

mod lie;

pub use lie::{
    g3_relations_exact, holod_brackets_exact, holod_element, q_invariance_exact, ExactCheck, LieQ, MatQ4, Ring,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::liealg::GroupElem;

/// A Gaussian rational `re + i·im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QC {
    pub re: BigRational,
    pub im: BigRational,
}

impl QC {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        QC { re, im }
    }

    pub fn int(n: i64) -> Self {
        QC::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `n/d`, real.
    pub fn ratio(n: i64, d: i64) -> Self {
        QC::new(BigRational::new(BigInt::from(n), BigInt::from(d)), BigRational::zero())
    }

    pub fn i() -> Self {
        QC::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        QC::int(0)
    }

    pub fn one() -> Self {
        QC::int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        let d = &self.re * &self.re + &self.im * &self.im;
        if d.is_zero() {
            return Err(Error::Singular("inverse of exact zero".into()));
        }
        Ok(QC::new(&self.re / &d, -&self.im / &d))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for QC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "({} + {}i)", self.re, self.im)
        }
    }
}

impl Add for &QC {
    type Output = QC;
    fn add(self, o: &QC) -> QC {
        QC::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &QC {
    type Output = QC;
    fn sub(self, o: &QC) -> QC {
        QC::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &QC {
    type Output = QC;
    fn mul(self, o: &QC) -> QC {
        QC::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl Neg for &QC {
    type Output = QC;
    fn neg(self) -> QC {
        QC::new(-&self.re, -&self.im)
    }
}

/// A polynomial in `x`, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly(Vec<QC>);

impl Poly {
    pub fn new(mut coeffs: Vec<QC>) -> Self {
        while coeffs.last().is_some_and(QC::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: QC) -> Self {
        Poly::new(vec![c])
    }

    /// `x − c`.
    pub fn x_minus(c: &QC) -> Self {
        Poly::new(vec![-c, QC::one()])
    }

    pub fn coeffs(&self) -> &[QC] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn scale(&self, c: &QC) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|c| c.to_c64().norm()).fold(0.0, f64::max)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let zero = QC::zero();
        Poly::new((0..n).map(|k| self.0.get(k).unwrap_or(&zero) + o.0.get(k).unwrap_or(&zero)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![QC::zero(); self.0.len() + o.0.len() - 1];
        for (a, ca) in self.0.iter().enumerate() {
            for (b, cb) in o.0.iter().enumerate() {
                out[a + b] = &out[a + b] + &(ca * cb);
            }
        }
        Poly::new(out)
    }
}

/// The parameters `(r₁, r₂, r₃)`, pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCurve {
    r: [QC; 3],
}

impl ExactCurve {
    pub fn new(r: [QC; 3]) -> Result<Self> {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if r[i] == r[j] {
                return Err(Error::Degenerate(format!("r{} = r{} = {}", i + 1, j + 1, r[i])));
            }
        }
        Ok(ExactCurve { r })
    }

    pub fn from_ints(r: [i64; 3]) -> Result<Arc<Self>> {
        Ok(Arc::new(Self::new(r.map(QC::int))?))
    }

    pub fn from_ratios(r: [(i64, i64); 3]) -> Result<Arc<Self>> {
        Ok(Arc::new(Self::new(r.map(|(n, d)| QC::ratio(n, d)))?))
    }

    /// `r_i` for `i ∈ 1..=3`.
    pub fn r(&self, i: usize) -> &QC {
        &self.r[i - 1]
    }

    /// `(r₁ + r₂ + r₃)/3`.
    pub fn mean(&self) -> QC {
        let s = &(&self.r[0] + &self.r[1]) + &self.r[2];
        &s * &QC::ratio(1, 3)
    }

    /// `A_i = r_i − (r₁+r₂+r₃)/3`.
    pub fn offset(&self, i: usize) -> QC {
        self.r(i) - &self.mean()
    }
}

/// An element of the quotient ring over a fixed curve.
#[derive(Clone, Debug)]
pub struct QElem {
    curve: Arc<ExactCurve>,
    c: [Poly; 8],
}

impl PartialEq for QElem {
    fn eq(&self, o: &Self) -> bool {
        self.c == o.c && (Arc::ptr_eq(&self.curve, &o.curve) || self.curve == o.curve)
    }
}

fn bits(i: usize) -> usize {
    1 << (i - 1)
}

impl QElem {
    pub fn zero(curve: &Arc<ExactCurve>) -> Self {
        QElem { curve: curve.clone(), c: Default::default() }
    }

    pub fn constant(c: QC, curve: &Arc<ExactCurve>) -> Self {
        Self::from_poly(Poly::constant(c), curve)
    }

    pub fn one(curve: &Arc<ExactCurve>) -> Self {
        Self::constant(QC::one(), curve)
    }

    /// The central element `p(x)`.
    pub fn from_poly(p: Poly, curve: &Arc<ExactCurve>) -> Self {
        let mut e = Self::zero(curve);
        e.c[0] = p;
        e
    }

    /// `x = λ_i² + r_i`.
    pub fn x(curve: &Arc<ExactCurve>) -> Self {
        Self::from_poly(Poly::new(vec![QC::zero(), QC::one()]), curve)
    }

    /// `λ = x − (r₁+r₂+r₃)/3`.
    pub fn central_lambda(curve: &Arc<ExactCurve>) -> Self {
        Self::from_poly(Poly::x_minus(&curve.mean()), curve)
    }

    /// `λ_i` for `i ∈ 1..=3`.
    pub fn lambda(i: usize, curve: &Arc<ExactCurve>) -> Self {
        let mut e = Self::zero(curve);
        e.c[bits(i)] = Poly::constant(QC::one());
        e
    }

    /// `y = λ₁λ₂λ₃`.
    pub fn y(curve: &Arc<ExactCurve>) -> Self {
        let mut e = Self::zero(curve);
        e.c[7] = Poly::constant(QC::one());
        e
    }

    pub fn curve(&self) -> &Arc<ExactCurve> {
        &self.curve
    }

    /// The coefficient of `λ^ε`.
    pub fn component(&self, eps: usize) -> &Poly {
        &self.c[eps]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Poly::is_zero)
    }

    /// Masks `ε` with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..8).filter(|&e| !self.c[e].is_zero()).collect()
    }

    /// Largest coefficient modulus, for reporting.
    pub fn max_abs(&self) -> f64 {
        self.c.iter().map(Poly::max_abs).fold(0.0, f64::max)
    }

    fn check(&self, o: &QElem) -> Result<()> {
        if Arc::ptr_eq(&self.curve, &o.curve) || self.curve == o.curve {
            Ok(())
        } else {
            Err(Error::Precondition("quotient-ring elements over different curves".into()))
        }
    }

    fn zip(&self, o: &QElem, f: impl Fn(&Poly, &Poly) -> Poly) -> QElem {
        QElem { curve: self.curve.clone(), c: std::array::from_fn(|e| f(&self.c[e], &o.c[e])) }
    }

    pub fn try_add(&self, o: &QElem) -> Result<QElem> {
        self.check(o)?;
        Ok(self.zip(o, |a, b| a + b))
    }

    pub fn try_sub(&self, o: &QElem) -> Result<QElem> {
        self.check(o)?;
        Ok(self.zip(o, |a, b| a - b))
    }

    pub fn neg(&self) -> QElem {
        QElem { curve: self.curve.clone(), c: std::array::from_fn(|e| -&self.c[e]) }
    }

    pub fn scale(&self, k: &QC) -> QElem {
        QElem { curve: self.curve.clone(), c: std::array::from_fn(|e| self.c[e].scale(k)) }
    }

    /// `λ^a·λ^b` reduced to normal form.
    pub fn try_mul(&self, o: &QElem) -> Result<QElem> {
        self.check(o)?;
        let mut out: [Poly; 8] = Default::default();
        let factors: [Poly; 3] = std::array::from_fn(|i| Poly::x_minus(self.curve.r(i + 1)));
        for a in self.support() {
            for b in o.support() {
                let mut p = &self.c[a] * &o.c[b];
                for (i, f) in factors.iter().enumerate() {
                    if a & b & (1 << i) != 0 {
                        p = &p * f;
                    }
                }
                out[a ^ b] = &out[a ^ b] + &p;
            }
        }
        Ok(QElem { curve: self.curve.clone(), c: out })
    }

    pub fn pow(&self, n: u32) -> QElem {
        let mut acc = QElem::one(&self.curve);
        for _ in 0..n {
            acc = q_mul(&acc, self).expect("same curve");
        }
        acc
    }
}

impl fmt::Display for QElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.support() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let terms: Vec<String> = self.c[e].coeffs().iter().enumerate().map(|(k, c)| format!("{c}·x^{k}")).collect();
            write!(f, "[{}]", terms.join(" + "))?;
            for i in 1..=3 {
                if e & bits(i) != 0 {
                    write!(f, "·λ{i}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Product in normal form.
pub fn q_mul(a: &QElem, b: &QElem) -> Result<QElem> {
    a.try_mul(b)
}

/// `σ(g)` acting on the `λ_i` by the sign pattern of `g`.
pub fn d2_act(g: GroupElem, a: &QElem) -> QElem {
    let s = g.curve_signs();
    let mut out = a.clone();
    for (e, p) in out.c.iter_mut().enumerate() {
        let sign: f64 = (1..=3).filter(|&i| e & bits(i) != 0).map(|i| s[i - 1]).product();
        if sign < 0.0 {
            *p = -&*p;
        }
    }
    out
}

/// `¼ Σ_g σ(g)a`, the projection onto `D₂`-invariants.
pub fn invariant_part(a: &QElem) -> QElem {
    let mut acc = QElem::zero(&a.curve);
    for g in GroupElem::d2() {
        acc = acc.try_add(&d2_act(g, a)).expect("same curve");
    }
    acc.scale(&QC::ratio(1, 4))
}

/// `num/λ^pow` in the localization at the central `λ = x − (r₁+r₂+r₃)/3`.
#[derive(Clone, Debug)]
pub struct LocElem {
    pub num: QElem,
    pub pow: u32,
}

impl LocElem {
    pub fn from_elem(num: QElem) -> Self {
        LocElem { num, pow: 0 }
    }

    /// `λ^k` for any integer `k`.
    pub fn lambda_pow(k: i32, curve: &Arc<ExactCurve>) -> Self {
        let lam = QElem::central_lambda(curve);
        if k >= 0 {
            LocElem { num: lam.pow(k as u32), pow: 0 }
        } else {
            LocElem { num: QElem::one(curve), pow: k.unsigned_abs() }
        }
    }

    fn lifted(&self, pow: u32) -> QElem {
        let lam = QElem::central_lambda(self.num.curve());
        q_mul(&self.num, &lam.pow(pow - self.pow)).expect("same curve")
    }

    pub fn try_add(&self, o: &LocElem) -> Result<LocElem> {
        let pow = self.pow.max(o.pow);
        Ok(LocElem { num: self.lifted(pow).try_add(&o.lifted(pow))?, pow })
    }

    pub fn try_mul(&self, o: &LocElem) -> Result<LocElem> {
        Ok(LocElem { num: q_mul(&self.num, &o.num)?, pow: self.pow + o.pow })
    }

    pub fn neg(&self) -> LocElem {
        LocElem { num: self.num.neg(), pow: self.pow }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl PartialEq for LocElem {
    fn eq(&self, o: &Self) -> bool {
        let pow = self.pow.max(o.pow);
        self.lifted(pow) == o.lifted(pow)
    }
}
