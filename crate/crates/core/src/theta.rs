//! Theta functions with half-integer characteristics.
//!
//! `θ_{a,b}(z|τ) = Σ_k exp(πiτ(k+a)² + 2πi(k+a)(z+b))`, with period 1 in `z`.
//! The Jacobi functions are `θ₁ = −θ_{½,½}`, `θ₂ = θ_{½,0}`, `θ₃ = θ_{0,0}`,
//! `θ₄ = θ_{0,½}`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sampling::Sampler;
use crate::I;

/// Smallest `Im τ` accepted for direct series evaluation.
pub const MIN_IM_TAU: f64 = 0.05;
/// Largest admissible real part of a series exponent before `exp` overflows.
pub const MAX_EXPONENT: f64 = 700.0;
const TAIL_RATIO: f64 = 1e-18;
const MAX_TERMS: i64 = 64;

/// A point of the upper half-plane with its nome and theta nulls cached.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModularParam {
    tau: Complex64,
    nome: Complex64,
    nulls: [Complex64; 4],
}

impl ModularParam {
    pub fn new(tau: Complex64) -> Result<Self> {
        if !(tau.im >= MIN_IM_TAU) || !tau.re.is_finite() {
            return Err(Error::Domain { im_tau: tau.im, min: MIN_IM_TAU });
        }
        let nome = (I * PI * tau).exp();
        let mut p = ModularParam { tau, nome, nulls: [Complex64::new(0.0, 0.0); 4] };
        for j in 2..=4 {
            p.nulls[j - 1] = theta_jacobi(j, Complex64::new(0.0, 0.0), &p)?;
        }
        Ok(p)
    }

    /// The square lattice modulus `τ = i`.
    pub fn i() -> Self {
        Self::new(I).expect("tau = i is admissible")
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    /// `q = exp(iπτ)`.
    pub fn nome(&self) -> Complex64 {
        self.nome
    }

    pub fn min_im_tau(&self) -> f64 {
        MIN_IM_TAU
    }

    /// Cached `θ_j(0|τ)`; `θ₁(0|τ)` is exactly zero.
    pub fn null(&self, j: usize) -> Complex64 {
        assert!((1..=4).contains(&j), "theta index {j} out of range 1..4");
        self.nulls[j - 1]
    }

    /// The parameter `2τ`, used by the duplication identities and `Ω`.
    pub fn doubled(&self) -> Result<Self> {
        Self::new(self.tau * 2.0)
    }
}

/// A half-integer characteristic `(a, b)` with `a, b ∈ {0, ½}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaChar {
    pub a_half: bool,
    pub b_half: bool,
}

impl ThetaChar {
    pub const fn new(a_half: bool, b_half: bool) -> Self {
        ThetaChar { a_half, b_half }
    }

    pub fn a(&self) -> f64 {
        if self.a_half {
            0.5
        } else {
            0.0
        }
    }

    pub fn b(&self) -> f64 {
        if self.b_half {
            0.5
        } else {
            0.0
        }
    }

    /// Jacobi index `j` and sign `s` such that `θ_{a,b} = s·θ_j`.
    pub fn jacobi(&self) -> (usize, f64) {
        match (self.a_half, self.b_half) {
            (true, true) => (1, -1.0),
            (true, false) => (2, 1.0),
            (false, false) => (3, 1.0),
            (false, true) => (4, 1.0),
        }
    }

    /// Characteristic of `θ_j` together with the sign `s` in `θ_j = s·θ_{a,b}`.
    pub fn of_jacobi(j: usize) -> (Self, f64) {
        match j {
            1 => (ThetaChar::new(true, true), -1.0),
            2 => (ThetaChar::new(true, false), 1.0),
            3 => (ThetaChar::new(false, false), 1.0),
            4 => (ThetaChar::new(false, true), 1.0),
            _ => panic!("theta index {j} out of range 1..4"),
        }
    }
}

fn check_tau(tau: Complex64) -> Result<()> {
    if tau.im >= MIN_IM_TAU {
        Ok(())
    } else {
        Err(Error::Domain { im_tau: tau.im, min: MIN_IM_TAU })
    }
}

/// Sums the (term-wise differentiated) series, starting from the dominant
/// index and walking outwards until both new terms are negligible.
fn series(a: f64, b: f64, z: Complex64, tau: Complex64, order: u32) -> Result<Complex64> {
    check_tau(tau)?;
    let peak = PI * z.im * z.im / tau.im;
    if !peak.is_finite() || peak > MAX_EXPONENT {
        return Err(Error::Overflow { z, exponent: peak });
    }
    let zb = z + b;
    let term = |k: i64| -> Complex64 {
        let n = k as f64 + a;
        let t = (I * PI * tau * n * n + 2.0 * PI * I * n * zb).exp();
        if order == 0 {
            t
        } else {
            t * (2.0 * PI * I * n).powu(order)
        }
    };
    let k0 = (-z.im / tau.im - a).round() as i64;
    let first = term(k0);
    let mut sum = first;
    let mut mass = first.norm();
    for step in 1..=MAX_TERMS {
        let up = term(k0 + step);
        let down = term(k0 - step);
        sum += up + down;
        let (nu, nd) = (up.norm(), down.norm());
        mass += nu + nd;
        if mass > 0.0 && nu < TAIL_RATIO * mass && nd < TAIL_RATIO * mass {
            break;
        }
    }
    Ok(sum)
}

/// `θ_{a,b}(z|τ)` for arbitrary real characteristics.
pub fn theta_general(a: f64, b: f64, z: Complex64, tau: &ModularParam) -> Result<Complex64> {
    series(a, b, z, tau.tau, 0)
}

/// `θ_j(z|τ)` for `j ∈ 1..=4`.
pub fn theta_jacobi(j: usize, z: Complex64, tau: &ModularParam) -> Result<Complex64> {
    theta_deriv(j, z, tau, 0)
}

/// Cached `θ_j(0|τ)`.
pub fn theta_null(j: usize, tau: &ModularParam) -> Complex64 {
    tau.null(j)
}

/// `d^n/dz^n θ_j(z|τ)` for `n ≤ 4`.
pub fn theta_deriv(j: usize, z: Complex64, tau: &ModularParam, order: u32) -> Result<Complex64> {
    if !(1..=4).contains(&j) {
        return Err(Error::Precondition(format!("theta index {j} out of range 1..4")));
    }
    if order > 4 {
        return Err(Error::Precondition(format!("derivative order {order} exceeds 4")));
    }
    let (ch, sign) = ThetaChar::of_jacobi(j);
    Ok(series(ch.a(), ch.b(), z, tau.tau, order)? * sign)
}

/// Groups of theta identities checked by [`identity_residuals`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentitySuite {
    /// Quasi-periodicity under `z → z+1` and `z → z+τ/2`.
    Shifts,
    /// Relations between `θ(2z)` and quadratic products of `θ(z)`.
    Quadratic,
    /// The `θ₁(2z)` product formula and the quadratic relation in `θ(2z)`.
    Duplication,
    /// Relations between modulus `2τ` and modulus `τ`.
    HalfTau,
    All,
}

impl FromStr for IdentitySuite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shifts" => Ok(Self::Shifts),
            "quadratic" => Ok(Self::Quadratic),
            "duplication" => Ok(Self::Duplication),
            "half-tau" => Ok(Self::HalfTau),
            "all" => Ok(Self::All),
            other => Err(Error::UnknownSuite(other.to_string())),
        }
    }
}

impl fmt::Display for IdentitySuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Shifts => "shifts",
            Self::Quadratic => "quadratic",
            Self::Duplication => "duplication",
            Self::HalfTau => "half-tau",
            Self::All => "all",
        })
    }
}

/// Which quartic relation between the theta nulls holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuarticOrientation {
    /// `θ₃⁴ = θ₂⁴ + θ₄⁴`.
    Standard,
    /// `θ₄⁴ = θ₂⁴ + θ₃⁴`.
    Swapped,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuarticCheck {
    /// `|θ₃⁴ − θ₂⁴ − θ₄⁴|`.
    pub standard: f64,
    /// `|θ₄⁴ − θ₂⁴ − θ₃⁴|`.
    pub swapped: f64,
}

impl QuarticCheck {
    pub fn new(tau: &ModularParam) -> Self {
        let t = |j| tau.null(j).powu(4);
        QuarticCheck { standard: (t(3) - t(2) - t(4)).norm(), swapped: (t(4) - t(2) - t(3)).norm() }
    }

    /// The orientation that holds within `tol`, if exactly one does.
    pub fn orientation(&self, tol: f64) -> Option<QuarticOrientation> {
        match (self.standard < tol, self.swapped < tol) {
            (true, false) => Some(QuarticOrientation::Standard),
            (false, true) => Some(QuarticOrientation::Swapped),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityResidual {
    pub name: &'static str,
    /// Largest residual after removing the common gauge factor.
    pub max_abs: f64,
    /// Largest residual as computed, without normalization.
    pub max_raw: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub suite: IdentitySuite,
    pub samples: usize,
    pub entries: Vec<IdentityResidual>,
    pub quartic: QuarticCheck,
}

impl IdentityReport {
    pub fn max_residual(&self) -> f64 {
        self.entries.iter().map(|e| e.max_abs).fold(0.0, f64::max)
    }
}

type IdentityFn = fn(Complex64, &ModularParam, &ModularParam) -> Result<Complex64>;

/// Name, gauge weight `w` and residual of one identity. Every term of the
/// identity grows like `exp(wπ(Im z)²/Im τ)` away from the real axis.
type Identity = (&'static str, i32, IdentityFn);

/// `exp(−wπ(Im z)²/Im τ)`, the common normalization of a weight-`w` identity.
fn gauge(w: i32, z: Complex64, p: &ModularParam) -> f64 {
    (-(w as f64) * PI * z.im * z.im / p.tau.im).exp()
}

fn th(j: usize, z: Complex64, p: &ModularParam) -> Result<Complex64> {
    theta_jacobi(j, z, p)
}

fn shift_prefactor(z: Complex64, p: &ModularParam) -> Complex64 {
    (-I * PI * (z + p.tau / 4.0)).exp()
}

fn identities(suite: IdentitySuite) -> Vec<Identity> {
    let shifts: Vec<Identity> = vec![
        ("theta1(z+1) = -theta1(z)", 1, |z, p, _| Ok(th(1, z + 1.0, p)? + th(1, z, p)?)),
        ("theta2(z+1) = -theta2(z)", 1, |z, p, _| Ok(th(2, z + 1.0, p)? + th(2, z, p)?)),
        ("theta3(z+1) = theta3(z)", 1, |z, p, _| Ok(th(3, z + 1.0, p)? - th(3, z, p)?)),
        ("theta4(z+1) = theta4(z)", 1, |z, p, _| Ok(th(4, z + 1.0, p)? - th(4, z, p)?)),
        ("theta1(z+tau/2) = i e theta4(z)", 1, |z, p, _| {
            Ok(th(1, z + p.tau / 2.0, p)? - I * shift_prefactor(z, p) * th(4, z, p)?)
        }),
        ("theta2(z+tau/2) = e theta3(z)", 1, |z, p, _| {
            Ok(th(2, z + p.tau / 2.0, p)? - shift_prefactor(z, p) * th(3, z, p)?)
        }),
        ("theta3(z+tau/2) = e theta2(z)", 1, |z, p, _| {
            Ok(th(3, z + p.tau / 2.0, p)? - shift_prefactor(z, p) * th(2, z, p)?)
        }),
        ("theta4(z+tau/2) = i e theta1(z)", 1, |z, p, _| {
            Ok(th(4, z + p.tau / 2.0, p)? - I * shift_prefactor(z, p) * th(1, z, p)?)
        }),
    ];
    let quadratic: Vec<Identity> = vec![
        ("quadratic difference", 4, |z, p, _| {
            let (t3, t4) = (p.null(3), p.null(4));
            let lhs = t3 * t4 * t4 * th(3, 2.0 * z, p)? - t4 * t3 * t3 * th(4, 2.0 * z, p)?;
            Ok(lhs + 2.0 * (th(1, z, p)? * th(2, z, p)?).powu(2))
        }),
        ("quadratic sum", 4, |z, p, _| {
            let (t3, t4) = (p.null(3), p.null(4));
            let lhs = t3 * t4 * t4 * th(3, 2.0 * z, p)? + t4 * t3 * t3 * th(4, 2.0 * z, p)?;
            Ok(lhs - 2.0 * (th(3, z, p)? * th(4, z, p)?).powu(2))
        }),
        ("quadratic product", 4, |z, p, _| {
            let (t3, t4) = (p.null(3), p.null(4));
            let lhs = (t3 * t4 * t4 * th(3, 2.0 * z, p)?).powu(2) - (t4 * t3 * t3 * th(4, 2.0 * z, p)?).powu(2);
            let prod = th(1, z, p)? * th(2, z, p)? * th(3, z, p)? * th(4, z, p)?;
            Ok(lhs + 4.0 * prod * prod)
        }),
    ];
    let duplication: Vec<Identity> = vec![
        ("theta1(2z) product formula", 4, |z, p, _| {
            let lhs = p.null(2) * p.null(3) * p.null(4) * th(1, 2.0 * z, p)?;
            Ok(lhs - 2.0 * th(1, z, p)? * th(2, z, p)? * th(3, z, p)? * th(4, z, p)?)
        }),
        ("quadratic relation in theta(2z)", 4, |z, p, _| {
            let w = 2.0 * z;
            Ok(p.null(4).powu(2) * th(3, w, p)?.powu(2) - p.null(3).powu(2) * th(4, w, p)?.powu(2)
                + p.null(2).powu(2) * th(1, w, p)?.powu(2))
        }),
    ];
    let half_tau: Vec<Identity> = vec![
        ("2 theta2(z|2tau)^2", 1, |z, p, p2| {
            Ok(2.0 * th(2, z, p2)?.powu(2) - (th(3, z, p)? * p.null(3) - th(4, z, p)? * p.null(4)))
        }),
        ("2 theta3(z|2tau)^2", 1, |z, p, p2| {
            Ok(2.0 * th(3, z, p2)?.powu(2) - (th(3, z, p)? * p.null(3) + th(4, z, p)? * p.null(4)))
        }),
        ("2 theta2 theta3 (z|2tau)", 1, |z, p, p2| Ok(2.0 * th(2, z, p2)? * th(3, z, p2)? - th(2, z, p)? * p.null(2))),
        ("2 theta1 theta4 (z|2tau)", 1, |z, p, p2| Ok(2.0 * th(1, z, p2)? * th(4, z, p2)? - th(1, z, p)? * p.null(2))),
    ];
    match suite {
        IdentitySuite::Shifts => shifts,
        IdentitySuite::Quadratic => quadratic,
        IdentitySuite::Duplication => duplication,
        IdentitySuite::HalfTau => half_tau,
        IdentitySuite::All => shifts.into_iter().chain(quadratic).chain(duplication).chain(half_tau).collect(),
    }
}

/// Residuals of the identities in `suite` at the given points. `max_abs` is
/// measured after dividing each identity by its gauge factor, which makes it
/// independent of where in the period parallelogram `z` lies.
pub fn identity_residuals_at(suite: IdentitySuite, tau: &ModularParam, points: &[Complex64]) -> Result<IdentityReport> {
    let tau2 = tau.doubled()?;
    let mut entries = Vec::new();
    for (name, w, f) in identities(suite) {
        let (mut max_abs, mut max_raw) = (0.0f64, 0.0f64);
        for &z in points {
            let r = f(z, tau, &tau2)?.norm();
            max_raw = max_raw.max(r);
            max_abs = max_abs.max(r * gauge(w, z, tau));
        }
        entries.push(IdentityResidual { name, max_abs, max_raw });
    }
    Ok(IdentityReport { suite, samples: points.len(), entries, quartic: QuarticCheck::new(tau) })
}

/// Residuals of the identities in `suite` at `samples` seeded random points
/// of the centred fundamental parallelogram.
pub fn identity_residuals(suite: &str, tau: &ModularParam, samples: usize, seed: u64) -> Result<IdentityReport> {
    let suite: IdentitySuite = suite.parse()?;
    let mut rng = Sampler::new(seed);
    let points: Vec<Complex64> = (0..samples).map(|_| rng.centered(tau.tau())).collect();
    identity_residuals_at(suite, tau, &points)
}
