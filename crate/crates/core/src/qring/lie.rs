//! Lie algebras over the exact rings: `sl(2)⊗R` in the `v`-basis and
//! `so(3,1)⊗R` as 4×4 matrices.

use std::fmt::Debug;
use std::sync::Arc;

use super::{d2_act, q_mul, ExactCurve, LocElem, QElem, QC};
use crate::liealg::{levi_civita, GroupElem};

/// Commutative coefficient ring. All operands must live over one curve;
/// mixing curves is a programming error and panics.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &QC) -> Self;
    fn is_zero(&self) -> bool;
    /// Short rendering used in failure witnesses.
    fn render(&self) -> String;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
}

impl Ring for QElem {
    fn zero_like(&self) -> Self {
        QElem::zero(self.curve())
    }
    fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("operands over one curve")
    }
    fn mul(&self, o: &Self) -> Self {
        q_mul(self, o).expect("operands over one curve")
    }
    fn neg(&self) -> Self {
        QElem::neg(self)
    }
    fn scale(&self, c: &QC) -> Self {
        QElem::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        QElem::is_zero(self)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Ring for LocElem {
    fn zero_like(&self) -> Self {
        LocElem::from_elem(QElem::zero(self.num.curve()))
    }
    fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("operands over one curve")
    }
    fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("operands over one curve")
    }
    fn neg(&self) -> Self {
        LocElem::neg(self)
    }
    fn scale(&self, c: &QC) -> Self {
        LocElem { num: self.num.scale(c), pow: self.pow }
    }
    fn is_zero(&self) -> bool {
        LocElem::is_zero(self)
    }
    fn render(&self) -> String {
        format!("({}) / λ^{}", self.num, self.pow)
    }
}

/// `Σ c_i v_i` with `[v_i, v_j] = ε_ijk v_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieQ<R: Ring> {
    pub c: [R; 3],
}

impl<R: Ring> LieQ<R> {
    /// `coeff·v_i`, `i ∈ 1..=3`.
    pub fn basis(i: usize, coeff: R) -> Self {
        let z = coeff.zero_like();
        let mut c = [z.clone(), z.clone(), z];
        c[i - 1] = coeff;
        LieQ { c }
    }

    pub fn add(&self, o: &Self) -> Self {
        LieQ { c: std::array::from_fn(|k| self.c[k].add(&o.c[k])) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        LieQ { c: std::array::from_fn(|k| self.c[k].sub(&o.c[k])) }
    }

    pub fn times(&self, r: &R) -> Self {
        LieQ { c: std::array::from_fn(|k| self.c[k].mul(r)) }
    }

    pub fn scale(&self, q: &QC) -> Self {
        LieQ { c: std::array::from_fn(|k| self.c[k].scale(q)) }
    }

    pub fn bracket(&self, o: &Self) -> Self {
        let z = self.c[0].zero_like();
        let mut out = [z.clone(), z.clone(), z];
        for i in 1..=3 {
            for j in 1..=3 {
                if i == j {
                    continue;
                }
                let k = 6 - i - j;
                let t = self.c[i - 1].mul(&o.c[j - 1]);
                out[k - 1] = if levi_civita(i, j, k) > 0.0 { out[k - 1].add(&t) } else { out[k - 1].sub(&t) };
            }
        }
        LieQ { c: out }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Ring::is_zero)
    }

    /// First nonzero coefficient, rendered.
    pub fn witness(&self) -> Option<String> {
        self.c.iter().enumerate().find(|(_, r)| !r.is_zero()).map(|(k, r)| format!("v{}: {}", k + 1, r.render()))
    }
}

/// A 4×4 matrix over [`QElem`].
#[derive(Clone, Debug, PartialEq)]
pub struct MatQ4 {
    pub m: [[QElem; 4]; 4],
}

impl MatQ4 {
    pub fn zero(curve: &Arc<ExactCurve>) -> Self {
        MatQ4 { m: std::array::from_fn(|_| std::array::from_fn(|_| QElem::zero(curve))) }
    }

    /// `(E_{i4} + E_{4i})⊗λ_i`.
    pub fn q(i: usize, curve: &Arc<ExactCurve>) -> Self {
        let mut out = Self::zero(curve);
        let l = QElem::lambda(i, curve);
        out.m[i - 1][3] = l.clone();
        out.m[3][i - 1] = l;
        out
    }

    fn zip(&self, o: &Self, f: impl Fn(&QElem, &QElem) -> QElem) -> Self {
        MatQ4 { m: std::array::from_fn(|a| std::array::from_fn(|b| f(&self.m[a][b], &o.m[a][b]))) }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, Ring::add)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, Ring::sub)
    }

    pub fn scale(&self, q: &QC) -> Self {
        MatQ4 { m: self.m.clone().map(|row| row.map(|e| e.scale(q))) }
    }

    pub fn matmul(&self, o: &Self) -> Self {
        MatQ4 {
            m: std::array::from_fn(|a| {
                std::array::from_fn(|b| {
                    (0..4).fold(self.m[a][0].zero_like(), |acc, t| acc.add(&self.m[a][t].mul(&o.m[t][b])))
                })
            }),
        }
    }

    pub fn bracket(&self, o: &Self) -> Self {
        self.matmul(o).sub(&o.matmul(self))
    }

    /// `ρ̃(g)⊗σ(g)`: conjugation by the diagonal sign matrix of `g`, then `σ(g)` on entries.
    pub fn act(&self, g: GroupElem) -> Self {
        let s = g.rho_tilde_matrix();
        let neg: [bool; 4] = std::array::from_fn(|a| s[(a, a)].re < 0.0);
        MatQ4 {
            m: std::array::from_fn(|a| {
                std::array::from_fn(|b| {
                    let e = d2_act(g, &self.m[a][b]);
                    if neg[a] != neg[b] {
                        e.neg()
                    } else {
                        e
                    }
                })
            }),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(QElem::is_zero)
    }

    pub fn witness(&self) -> Option<String> {
        for (a, row) in self.m.iter().enumerate() {
            for (b, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    return Some(format!("entry ({}, {}): {}", a + 1, b + 1, e));
                }
            }
        }
        None
    }
}

/// Outcome of an exact identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCheck {
    pub name: String,
    /// Number of identities reduced.
    pub checked: usize,
    /// The first nonzero residual, if any.
    pub witness: Option<String>,
}

impl ExactCheck {
    fn new(name: &str) -> Self {
        ExactCheck { name: name.to_string(), checked: 0, witness: None }
    }

    fn record(&mut self, label: impl FnOnce() -> String, residual: Option<String>) {
        self.checked += 1;
        if self.witness.is_none() {
            if let Some(w) = residual {
                self.witness = Some(format!("{}: {w}", label()));
            }
        }
    }

    pub fn pass(&self) -> bool {
        self.witness.is_none()
    }
}

const CYCLIC: [(usize, usize, usize); 3] = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];

/// The `g(3)` relations
/// `[X_i,[X_i,X_k]] − [X_j,[X_j,X_k]] = c·(r_j − r_i)X_k` and `[X_i,[X_j,X_k]] = 0`
/// for three generator choices:
///
/// * `p_i = √−1·v_i⊗λ_i` with `c = 1`,
/// * `v_i⊗λ_i` with `c = −1`,
/// * `Q_i = (E_{i4}+E_{4i})⊗λ_i` in `so(3,1)` with `c = 1`.
pub fn g3_relations_exact(curve: &Arc<ExactCurve>) -> [ExactCheck; 3] {
    let i = QC::i();
    let p: Vec<LieQ<QElem>> = (1..=3).map(|k| LieQ::basis(k, QElem::lambda(k, curve).scale(&i))).collect();
    let bare: Vec<LieQ<QElem>> = (1..=3).map(|k| LieQ::basis(k, QElem::lambda(k, curve))).collect();
    let q: Vec<MatQ4> = (1..=3).map(|k| MatQ4::q(k, curve)).collect();

    let mut out = [ExactCheck::new("g3 p_i"), ExactCheck::new("g3 bare v_i"), ExactCheck::new("g3 Q_i")];
    for (check, x, sign) in [(0, &p, 1), (1, &bare, -1)] {
        for (a, b, k) in CYCLIC {
            let diff = curve.r(b) - curve.r(a);
            let coeff = if sign > 0 { diff } else { -&diff };
            let (xa, xb, xk) = (&x[a - 1], &x[b - 1], &x[k - 1]);
            let lhs = xa.bracket(&xa.bracket(xk)).sub(&xb.bracket(&xb.bracket(xk)));
            let res = lhs.sub(&xk.scale(&coeff));
            out[check].record(|| format!("quadratic ({a},{b},{k})"), res.witness());
            let nested = xa.bracket(&xb.bracket(xk));
            out[check].record(|| format!("nested ({a},{b},{k})"), nested.witness());
        }
    }
    for (a, b, k) in CYCLIC {
        let (xa, xb, xk) = (&q[a - 1], &q[b - 1], &q[k - 1]);
        let lhs = xa.bracket(&xa.bracket(xk)).sub(&xb.bracket(&xb.bracket(xk)));
        let res = lhs.sub(&xk.scale(&(curve.r(b) - curve.r(a))));
        out[2].record(|| format!("quadratic ({a},{b},{k})"), res.witness());
        out[2].record(|| format!("nested ({a},{b},{k})"), xa.bracket(&xb.bracket(xk)).witness());
    }
    out
}

/// `Q_i` is fixed by `ρ̃(g)⊗σ(g)` for every `g ∈ D₂`.
pub fn q_invariance_exact(curve: &Arc<ExactCurve>) -> ExactCheck {
    let mut out = ExactCheck::new("Q_i invariance");
    for i in 1..=3 {
        let q = MatQ4::q(i, curve);
        for g in GroupElem::d2() {
            out.record(|| format!("Q{i} under {g:?}"), q.act(g).sub(&q).witness());
        }
    }
    out
}

/// `X_i^{2m+1} = λ^m λ_i v_i` and `X_i^{2m} = λ^{m−1}λ_jλ_k v_i` in the
/// localization at the central `λ`.
pub fn holod_element(i: usize, n: i32, curve: &Arc<ExactCurve>) -> LieQ<LocElem> {
    let m = n.div_euclid(2);
    let (j, k) = (i % 3 + 1, (i + 1) % 3 + 1);
    let coeff = if n.rem_euclid(2) == 1 {
        LocElem::lambda_pow(m, curve).mul(&LocElem::from_elem(QElem::lambda(i, curve)))
    } else {
        let ljk = q_mul(&QElem::lambda(j, curve), &QElem::lambda(k, curve)).expect("one curve");
        LocElem::lambda_pow(m - 1, curve).mul(&LocElem::from_elem(ljk))
    };
    LieQ::basis(i, coeff)
}

/// The three bracket families of the `X_i^n` for `l, s ∈ range`:
///
/// * `[X_i^{2l+1}, X_j^{2s+1}] = ε_ijk X_k^{2(l+s)+2}`
/// * `[X_i^{2l+1}, X_j^{2s}] = ε_ijk (X_k^{2(l+s)+1} − A_i X_k^{2(l+s)−1})`
/// * `[X_i^{2l}, X_j^{2s}] = ε_ijk (X_k^{2(l+s)} − A_k X_k^{2(l+s)−2})`
pub fn holod_brackets_exact(curve: &Arc<ExactCurve>, range: std::ops::RangeInclusive<i32>) -> ExactCheck {
    let mut out = ExactCheck::new("holod brackets");
    let offsets_sum = &(&curve.offset(1) + &curve.offset(2)) + &curve.offset(3);
    out.record(|| "offset sum".into(), (!offsets_sum.is_zero()).then(|| offsets_sum.to_string()));
    let x = |i: usize, n: i32| holod_element(i, n, curve);
    for i in 1..=3 {
        for j in 1..=3 {
            if i == j {
                continue;
            }
            let k = 6 - i - j;
            let eps = QC::int(levi_civita(i, j, k) as i64);
            let (ai, ak) = (curve.offset(i), curve.offset(k));
            for l in range.clone() {
                for s in range.clone() {
                    let n = 2 * (l + s);
                    let res = x(i, 2 * l + 1).bracket(&x(j, 2 * s + 1)).sub(&x(k, n + 2).scale(&eps));
                    out.record(|| format!("odd-odd i={i} j={j} l={l} s={s}"), res.witness());
                    let rhs = x(k, n + 1).sub(&x(k, n - 1).scale(&ai)).scale(&eps);
                    let res = x(i, 2 * l + 1).bracket(&x(j, 2 * s)).sub(&rhs);
                    out.record(|| format!("odd-even i={i} j={j} l={l} s={s}"), res.witness());
                    let rhs = x(k, n).sub(&x(k, n - 2).scale(&ak)).scale(&eps);
                    let res = x(i, 2 * l).bracket(&x(j, 2 * s)).sub(&rhs);
                    out.record(|| format!("even-even i={i} j={j} l={l} s={s}"), res.witness());
                }
            }
        }
    }
    out
}
