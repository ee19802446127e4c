//! The Fock space of symmetric functions: Heisenberg generators, the vertex
//! operators `Γ±` and `e^{φ±(z)}`, the operators `V` and `W(m)`, and graded
//! matrices with explicit exactness windows.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::localization::{
    fit_w_normalization, geometric_v_pairing, geometric_w_element, W_NORMALIZATION,
};
use crate::macdonald::{degree_table, modified_h, t_operator};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::report::Report;
use crate::symfunc::{herm, w_k, weight_herm, SymFunc};

/// `(1 - q^k)(1 - t^k)`.
fn qt_factor(k: u32) -> FieldElem {
    let k = 2 * i64::from(k);
    FieldElem::one()
        .sub(&FieldElem::half_qt(k, 0))
        .mul(&FieldElem::one().sub(&FieldElem::half_qt(0, k)))
}

/// `α_n`: for `n < 0` multiplication by `p_{-n} / ((1-q^{-n})(1-t^{-n}))`,
/// for `n > 0` the derivation `n (qt)^{n/2} ∂/∂p_n`.
pub fn alpha(n: i32, f: &SymFunc) -> Result<SymFunc> {
    match n {
        0 => Err(Error::Domain("α_0 is not part of the algebra".into())),
        n if n < 0 => {
            let k = n.unsigned_abs();
            Ok(f.mul(&SymFunc::pk(k)).scale(&qt_factor(k).inv()?))
        }
        n => {
            let k = n as u32;
            let c = FieldElem::from_int(i64::from(n)).mul(&FieldElem::half_qt(n.into(), n.into()));
            Ok(f.derivative(k).scale(&c))
        }
    }
}

/// An evaluation point for `e^{φ±(z)}`; always invertible.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexArg(FieldElem);

impl VertexArg {
    pub fn new(z: FieldElem) -> Result<VertexArg> {
        if z.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(VertexArg(z))
    }

    pub fn value(&self) -> &FieldElem {
        &self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `Σ_{|λ| ≤ max_deg} Π_i c(λ_i) p_λ / z_λ`, the series `exp(Σ c(k) p_k / k)`.
pub fn gamma_minus_series<F: Fn(u32) -> FieldElem>(c: F, max_deg: u32) -> SymFunc {
    let cs: Vec<FieldElem> = (0..=max_deg).map(|k| if k == 0 { FieldElem::zero() } else { c(k) }).collect();
    let mut out = SymFunc::zero();
    for la in partitions_up_to(max_deg) {
        let mut x = FieldElem::from_bigint(la.z()).inv().unwrap();
        for &k in la.parts() {
            x = x.mul(&cs[k as usize]);
        }
        if !x.is_zero() {
            out.add_term(la, &x);
        }
    }
    out
}

/// `Γ₋` with `p_k` coefficient `c(k)/k` in the exponent, truncated at `max_deg`.
pub fn gamma_minus_with<F: Fn(u32) -> FieldElem>(c: F, g: &SymFunc, max_deg: u32) -> SymFunc {
    gamma_minus_series(c, max_deg).mul_truncated(g, max_deg)
}

/// `Γ₊ = exp(Σ c(k) ∂/∂p_k)`, the shift `p_k ↦ p_k + c(k)`; exact.
pub fn gamma_plus_with<F: Fn(u32) -> FieldElem>(c: F, g: &SymFunc) -> SymFunc {
    g.translate(c)
}

/// `Γ±(f)` with the Adams rule `c(k) = f_[k]`.
pub fn gamma(sign: Sign, f: &FieldElem, g: &SymFunc, max_deg: u32) -> SymFunc {
    match sign {
        Sign::Minus => gamma_minus_with(|k| f.adams(k), g, max_deg),
        Sign::Plus => gamma_plus_with(|k| f.adams(k), g),
    }
}

/// The part of `Γ₋` raising degree by exactly `a`.
pub fn gamma_minus_graded<F: Fn(u32) -> FieldElem>(c: F, g: &SymFunc, a: u32) -> SymFunc {
    let head = gamma_minus_series(c, a).degree_part(a);
    head.mul(g)
}

/// The part of `Γ₊` lowering degree by exactly `b`:
/// `Σ_{|λ|=b} Π_k c(k)^{m_k} / m_k! ∂_λ`.
pub fn gamma_plus_graded<F: Fn(u32) -> FieldElem>(c: F, g: &SymFunc, b: u32) -> SymFunc {
    let mut out = SymFunc::zero();
    for la in partitions_of(b) {
        let mut coeff = FieldElem::one();
        let mut h = g.clone();
        for (k, mk) in la.multiplicities() {
            let mut fact = 1i64;
            for i in 1..=i64::from(mk) {
                fact *= i;
            }
            coeff = coeff.mul(&c(k).pow(i64::from(mk))).div(&FieldElem::from_int(fact));
            for _ in 0..mk {
                h = h.derivative(k);
            }
        }
        if !coeff.is_zero() && !h.is_zero() {
            out = out.add(&h.scale(&coeff));
        }
    }
    out
}

/// Coefficient of `Γ₋` in `e^{φ₊(z)}`: `-z^k / ((1-q^k)(1-t^k))`.
fn phi_plus_coeff(z: &FieldElem, k: u32) -> FieldElem {
    z.adams(k).neg().div(&qt_factor(k))
}

/// Coefficient of `Γ₊` in `e^{φ₋(z)}`: `(√(qt)/z)^k`.
fn phi_minus_coeff(z: &FieldElem, k: u32) -> FieldElem {
    FieldElem::sqrt_qt().div(z).pow(i64::from(k))
}

/// `e^{φ₊(z)} = Γ₋(-z/((1-q)(1-t)))`, truncated at `max_deg`.
pub fn e_phi_plus(z: &VertexArg, g: &SymFunc, max_deg: u32) -> SymFunc {
    gamma_minus_with(|k| phi_plus_coeff(&z.0, k), g, max_deg)
}

/// `e^{φ₋(z)} = Γ₊(√(qt)/z)`.
pub fn e_phi_minus(z: &VertexArg, g: &SymFunc) -> SymFunc {
    gamma_plus_with(|k| phi_minus_coeff(&z.0, k), g)
}

/// `x^{L_0}`: scales the degree-`d` part by `x^d`.
pub fn l0_power(f: &SymFunc, x: &FieldElem) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, c) in f.terms() {
        out.add_term(mu.clone(), &c.mul(&x.pow(i64::from(mu.size()))));
    }
    out
}

/// `V = (-1)^{L_0} T e^{φ₊(1)} e^{φ₋(√(qt))}`, exact in degrees `≤ max_deg`.
pub fn op_v(f: &SymFunc, max_deg: u32) -> SymFunc {
    let g = gamma_plus_with(|_| FieldElem::one(), f);
    let g = gamma_minus_with(|k| qt_factor(k).inv().unwrap().neg(), &g, max_deg);
    let g = t_operator(&g, 1);
    l0_power(&g, &FieldElem::from_int(-1))
}

/// `W(m) = (m/√(qt))^{L_0} e^{φ₊(1)-φ₊(qt/m)} e^{φ₋(√(qt))-φ₋(√(qt)/m)}`,
/// exact in degrees `≤ max_deg`.
pub fn op_w(f: &SymFunc, m: &FieldElem, max_deg: u32) -> SymFunc {
    let qt = FieldElem::half_qt(2, 2);
    let g = gamma_plus_with(|k| FieldElem::one().sub(&m.pow(i64::from(k))), f);
    let g = gamma_minus_with(
        |k| qt.adams(k).div(&m.pow(i64::from(k))).sub(&FieldElem::one()).div(&qt_factor(k)),
        &g,
        max_deg,
    );
    l0_power(&g, &m.div(&FieldElem::sqrt_qt()))
}

// Graded matrices ------------------------------------------------------------

/// Rows index output basis elements, columns input ones.
pub type Matrix = Vec<Vec<FieldElem>>;

fn mat_mul(a: &Matrix, b: &Matrix, inner: usize) -> Matrix {
    let rows = a.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![FieldElem::zero(); cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
                }
            }
        }
    }
    out
}

fn mat_add(a: &mut Matrix, b: &Matrix) {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x = x.add(y);
        }
    }
}

/// A linear operator on the degree window `[min_deg, max_deg]` in the `p_μ`
/// basis. `raise`/`lower` bound how far the operator moves degree (`None` is
/// unbounded); only exactly known blocks are stored and reading any other
/// block is an error.
#[derive(Clone, PartialEq)]
pub struct TruncOp {
    pub min_deg: u32,
    pub max_deg: u32,
    pub raise: Option<u32>,
    pub lower: Option<u32>,
    blocks: BTreeMap<(u32, u32), Matrix>,
}

impl TruncOp {
    /// Tabulates `action` on every `p_μ` with degree in the window. The caller
    /// guarantees that `action` is exact in all degrees `≤ max_deg`.
    pub fn from_action<F: Fn(&SymFunc) -> SymFunc>(
        min_deg: u32,
        max_deg: u32,
        raise: Option<u32>,
        lower: Option<u32>,
        action: F,
    ) -> TruncOp {
        let mut blocks = BTreeMap::new();
        for c in min_deg..=max_deg {
            let ins = partitions_of(c);
            let images: Vec<SymFunc> = ins.iter().map(|mu| action(&SymFunc::p(mu))).collect();
            for a in min_deg..=max_deg {
                if !degree_reachable(a, c, raise, lower) {
                    continue;
                }
                let outs = partitions_of(a);
                let m: Matrix = outs
                    .iter()
                    .map(|nu| images.iter().map(|img| img.coeff(nu)).collect())
                    .collect();
                blocks.insert((a, c), m);
            }
        }
        TruncOp {
            min_deg,
            max_deg,
            raise,
            lower,
            blocks,
        }
    }

    pub fn identity(min_deg: u32, max_deg: u32) -> TruncOp {
        TruncOp::from_action(min_deg, max_deg, Some(0), Some(0), SymFunc::clone)
    }

    pub fn v_operator(max_deg: u32) -> TruncOp {
        TruncOp::from_action(0, max_deg, None, None, |f| op_v(f, max_deg))
    }

    pub fn w_operator(m: &FieldElem, max_deg: u32) -> TruncOp {
        TruncOp::from_action(0, max_deg, None, None, |f| op_w(f, m, max_deg))
    }

    pub fn alpha_operator(n: i32, max_deg: u32) -> Result<TruncOp> {
        alpha(n, &SymFunc::one())?;
        let step = n.unsigned_abs();
        let (raise, lower) = if n < 0 { (step, 0) } else { (0, step) };
        Ok(TruncOp::from_action(0, max_deg, Some(raise), Some(lower), |f| {
            alpha(n, f).expect("nonzero mode")
        }))
    }

    /// The stored block `d_out ← d_in`; zero blocks outside the declared
    /// degree shift are produced on demand.
    pub fn block(&self, d_out: u32, d_in: u32) -> Result<Matrix> {
        if let Some(b) = self.blocks.get(&(d_out, d_in)) {
            return Ok(b.clone());
        }
        let inside = (self.min_deg..=self.max_deg).contains(&d_out)
            && (self.min_deg..=self.max_deg).contains(&d_in);
        if inside && !degree_reachable(d_out, d_in, self.raise, self.lower) {
            let rows = partitions_of(d_out).len();
            let cols = partitions_of(d_in).len();
            return Ok(vec![vec![FieldElem::zero(); cols]; rows]);
        }
        Err(Error::Window(format!(
            "block {d_out}<-{d_in} is not exactly known on window [{}, {}]",
            self.min_deg, self.max_deg
        )))
    }

    /// Applies the operator to `f`, which must live inside the window.
    /// Returns all output degrees of the window.
    pub fn apply(&self, f: &SymFunc) -> Result<SymFunc> {
        if let (Some(lo), Some(hi)) = (f.min_degree(), f.max_degree()) {
            if lo < self.min_deg || hi > self.max_deg {
                return Err(Error::Window(format!(
                    "input degrees [{lo}, {hi}] leave window [{}, {}]",
                    self.min_deg, self.max_deg
                )));
            }
        }
        let mut out = SymFunc::zero();
        for c in self.min_deg..=self.max_deg {
            let part = f.degree_part(c);
            if part.is_zero() {
                continue;
            }
            let ins = partitions_of(c);
            let v: Vec<FieldElem> = ins.iter().map(|mu| part.coeff(mu)).collect();
            for a in self.min_deg..=self.max_deg {
                if !degree_reachable(a, c, self.raise, self.lower) {
                    continue;
                }
                let b = self.block(a, c)?;
                for (nu, row) in partitions_of(a).into_iter().zip(&b) {
                    let x: FieldElem = row.iter().zip(&v).map(|(r, x)| r.mul(x)).sum();
                    out.add_term(nu, &x);
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ o`. A block `a ← c` is kept only when every intermediate degree
    /// that can contribute lies inside both windows.
    pub fn compose(&self, o: &TruncOp) -> TruncOp {
        let min_deg = self.min_deg.max(o.min_deg);
        let max_deg = self.max_deg.min(o.max_deg);
        let raise = self.raise.zip(o.raise).map(|(x, y)| x + y);
        let lower = self.lower.zip(o.lower).map(|(x, y)| x + y);
        let mut blocks = BTreeMap::new();
        for c in min_deg..=max_deg {
            for a in min_deg..=max_deg {
                if !degree_reachable(a, c, raise, lower) {
                    continue;
                }
                // Intermediate b: o moves c to b, self moves b to a.
                let lo = [
                    o.lower.map(|l| i64::from(c) - i64::from(l)),
                    self.raise.map(|r| i64::from(a) - i64::from(r)),
                ]
                .into_iter()
                .flatten()
                .fold(0, i64::max);
                let hi = [
                    o.raise.map(|r| i64::from(c) + i64::from(r)),
                    self.lower.map(|l| i64::from(a) + i64::from(l)),
                ]
                .into_iter()
                .flatten()
                .min();
                let Some(hi) = hi else { continue };
                if lo < i64::from(min_deg) || hi > i64::from(max_deg) {
                    continue;
                }
                let rows = partitions_of(a).len();
                let cols = partitions_of(c).len();
                let mut acc = vec![vec![FieldElem::zero(); cols]; rows];
                let mut ok = true;
                for b in lo..=hi {
                    let b = b as u32;
                    match (self.block(a, b), o.block(b, c)) {
                        (Ok(x), Ok(y)) => mat_add(&mut acc, &mat_mul(&x, &y, partitions_of(b).len())),
                        _ => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    blocks.insert((a, c), acc);
                }
            }
        }
        TruncOp {
            min_deg,
            max_deg,
            raise,
            lower,
            blocks,
        }
    }

    /// The adjoint for the Hermitian form: `⟨A* f, g⟩ = ⟨f, A g⟩`.
    pub fn adjoint(&self) -> TruncOp {
        let mut blocks = BTreeMap::new();
        for (&(a, c), m) in &self.blocks {
            let outs = partitions_of(a);
            let ins = partitions_of(c);
            let adj: Matrix = ins
                .iter()
                .enumerate()
                .map(|(j, nu)| {
                    let gn = weight_herm(nu);
                    outs.iter()
                        .enumerate()
                        .map(|(i, mu)| m[i][j].conj().mul(&weight_herm(mu)).div(&gn))
                        .collect()
                })
                .collect();
            blocks.insert((c, a), adj);
        }
        TruncOp {
            min_deg: self.min_deg,
            max_deg: self.max_deg,
            raise: self.lower,
            lower: self.raise,
            blocks,
        }
    }

    pub fn scale(&self, c: &FieldElem) -> TruncOp {
        let mut out = self.clone();
        for m in out.blocks.values_mut() {
            for row in m.iter_mut() {
                for x in row.iter_mut() {
                    *x = x.mul(c);
                }
            }
        }
        out
    }

    pub fn sub(&self, o: &TruncOp) -> Result<TruncOp> {
        if (self.min_deg, self.max_deg) != (o.min_deg, o.max_deg) {
            return Err(Error::Window("windows differ".into()));
        }
        let raise = self.raise.zip(o.raise).map(|(x, y)| x.max(y));
        let lower = self.lower.zip(o.lower).map(|(x, y)| x.max(y));
        let mut blocks = BTreeMap::new();
        for a in self.min_deg..=self.max_deg {
            for c in self.min_deg..=self.max_deg {
                if !degree_reachable(a, c, raise, lower) {
                    continue;
                }
                if let (Ok(x), Ok(y)) = (self.block(a, c), o.block(a, c)) {
                    let m = x
                        .iter()
                        .zip(&y)
                        .map(|(rx, ry)| rx.iter().zip(ry).map(|(p, q)| p.sub(q)).collect())
                        .collect();
                    blocks.insert((a, c), m);
                }
            }
        }
        Ok(TruncOp {
            min_deg: self.min_deg,
            max_deg: self.max_deg,
            raise,
            lower,
            blocks,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().flatten().flatten().all(FieldElem::is_zero)
    }

    /// Trace of the `d ← d` block in the `p` basis.
    pub fn trace_deg(&self, d: u32) -> Result<FieldElem> {
        let b = self.block(d, d)?;
        Ok((0..b.len()).map(|i| b[i][i].clone()).sum())
    }

    /// Trace of the `d ← d` block computed in the `H` basis.
    pub fn trace_deg_h(&self, d: u32) -> Result<FieldElem> {
        self.block(d, d)?;
        let table = degree_table(d);
        let mut acc = FieldElem::zero();
        for r in &table.records {
            let image = self.apply(&r.h)?.degree_part(d);
            acc = acc.add(&herm(&r.h, &image).div(&r.norm_herm));
        }
        Ok(acc)
    }

    /// Block-list rendering used by golden files.
    pub fn to_debug_string(&self) -> String {
        let mut out = format!("window {}..{}\n", self.min_deg, self.max_deg);
        let show = |x: Option<u32>| x.map_or("unbounded".to_string(), |v| v.to_string());
        out.push_str(&format!("raise {}\nlower {}\n", show(self.raise), show(self.lower)));
        for (&(a, c), m) in &self.blocks {
            out.push_str(&format!("block {a}<-{c}\n"));
            let ins = partitions_of(c);
            for (nu, row) in partitions_of(a).iter().zip(m) {
                for (mu, x) in ins.iter().zip(row) {
                    if !x.is_zero() {
                        out.push_str(&format!("  {nu} {mu} {x}\n"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for TruncOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_debug_string())
    }
}

fn degree_reachable(a: u32, c: u32, raise: Option<u32>, lower: Option<u32>) -> bool {
    if a >= c {
        raise.is_none_or(|r| a - c <= r)
    } else {
        lower.is_none_or(|l| c - a <= l)
    }
}

// Series helpers -------------------------------------------------------------

/// Coefficients of `exp(Σ_{k≥1} l_k x^k)` through `x^n`, given `log[k] = l_k`
/// (`log[0]` is ignored).
pub fn exp_series(log: &[FieldElem], n: usize) -> Vec<FieldElem> {
    let mut e = vec![FieldElem::one()];
    for d in 1..=n {
        let mut acc = FieldElem::zero();
        for k in 1..=d.min(log.len().saturating_sub(1)) {
            if log[k].is_zero() {
                continue;
            }
            acc = acc.add(&log[k].mul(&e[d - k]).scale_int(k as i64));
        }
        e.push(acc.div(&FieldElem::from_int(d as i64)));
    }
    e
}

/// Coefficients of `(x)_{q,t} = exp(-Σ x^k / (k (1-q^k)(1-t^k)))` through `x^n`.
pub fn qt_pochhammer_series(n: usize) -> Vec<FieldElem> {
    let log: Vec<FieldElem> = (0..=n)
        .map(|k| {
            if k == 0 {
                FieldElem::zero()
            } else {
                qt_factor(k as u32).scale_int(k as i64).inv().unwrap().neg()
            }
        })
        .collect();
    exp_series(&log, n)
}

// Identity checks ------------------------------------------------------------

/// `[α_n, α_m] = δ_{n+m,0} n / w(n)` on every `p_λ` with `|λ| ≤ max_deg`.
pub fn check_heisenberg(max_mode: i32, max_deg: u32) -> Report {
    let mut rep = Report::new("heisenberg")
        .param("max_mode", max_mode)
        .param("max_degree", max_deg);
    let modes: Vec<i32> = (-max_mode..=max_mode).filter(|&n| n != 0).collect();
    let inputs: Vec<SymFunc> = partitions_up_to(max_deg).iter().map(SymFunc::p).collect();
    for &n in &modes {
        for &m in &modes {
            let expect = if n + m == 0 {
                FieldElem::from_int(i64::from(n)).div(&w_k(n.unsigned_abs()))
            } else {
                FieldElem::zero()
            };
            for f in &inputs {
                let lhs = alpha(n, &alpha(m, f).unwrap())
                    .unwrap()
                    .sub(&alpha(m, &alpha(n, f).unwrap()).unwrap());
                let rhs = f.scale(&expect);
                rep.check(lhs == rhs, || {
                    format!("n={n} m={m} f={f}: lhs = {lhs}, rhs = {rhs}")
                });
            }
        }
    }
    rep
}

/// `e^{φ₋(z)} e^{φ₊(w)} = (√(qt) w/z)_{q,t} e^{φ₊(w)} e^{φ₋(z)}` compared
/// coefficient by coefficient in the markers `w^a z^{-b}`, `a, b ≤ order`.
pub fn check_comm_phi(order: u32, max_deg: u32) -> Report {
    let mut rep = Report::new("comm_phi")
        .param("order", order)
        .param("max_degree", max_deg);
    // Marker-free coefficients: w^k in φ₊, z^{-k} in φ₋.
    let cm = |k: u32| qt_factor(k).inv().unwrap().neg();
    let cp = |k: u32| FieldElem::half_qt(i64::from(k), i64::from(k));
    let e = qt_pochhammer_series(order as usize);
    let inputs: Vec<SymFunc> = partitions_up_to(max_deg).iter().map(SymFunc::p).collect();
    for f in &inputs {
        for a in 0..=order {
            for b in 0..=order {
                let lhs = gamma_plus_graded(cp, &gamma_minus_graded(cm, f, a), b);
                let mut rhs = SymFunc::zero();
                for c in 0..=a.min(b) {
                    let pref = e[c as usize].mul(&FieldElem::half_qt(i64::from(c), i64::from(c)));
                    if pref.is_zero() {
                        continue;
                    }
                    let inner = gamma_minus_graded(cm, &gamma_plus_graded(cp, f, b - c), a - c);
                    rhs = rhs.add(&inner.scale(&pref));
                }
                rep.check(lhs == rhs, || {
                    format!("f={f} w^{a} z^-{b}: lhs = {lhs}, rhs = {rhs}")
                });
            }
        }
    }
    rep
}

/// `⟨p_ν, V H_μ⟩ = (qt)^{-|ν|/2} p̄_ν(x_μ)` for `|μ|, |ν| ≤ max_deg`.
pub fn check_thm2(max_deg: u32) -> Report {
    let mut rep = Report::new("thm2").param("max_degree", max_deg);
    for mu in partitions_up_to(max_deg) {
        let vh = op_v(&modified_h(&mu), max_deg);
        for nu in partitions_up_to(max_deg) {
            let pn = SymFunc::p(&nu);
            let lhs = herm(&pn, &vh);
            let rhs = geometric_v_pairing(&pn, &mu);
            rep.check(lhs == rhs, || {
                format!("mu={mu} nu={nu}: lhs = {lhs}, rhs = {rhs}")
            });
        }
    }
    rep
}

/// `⟨H_λ, W(m) H_μ⟩` against the fixed-point formula for `|λ|, |μ| ≤ max_deg`.
/// The normalization is first re-derived from the seed pairs and must agree
/// with the frozen constant.
pub fn check_cor1(max_deg: u32) -> Report {
    let mut rep = Report::new("cor1").param("max_degree", max_deg);
    let top = max_deg.max(1);
    let m = FieldElem::m();
    let images: BTreeMap<Partition, SymFunc> = partitions_up_to(top)
        .into_iter()
        .map(|mu| {
            let w = op_w(&modified_h(&mu), &m, top);
            (mu, w)
        })
        .collect();
    let element = |la: &Partition, mu: &Partition| herm(&modified_h(la), &images[mu]);
    match fit_w_normalization(element) {
        Ok(n) => rep.check(n == W_NORMALIZATION, || {
            format!("seed fit gives {n:?}, frozen constant is {W_NORMALIZATION:?}")
        }),
        Err(e) => rep.check(false, || format!("seed fit failed: {e}")),
    }
    for la in partitions_up_to(max_deg) {
        for mu in partitions_up_to(max_deg) {
            let lhs = element(&la, &mu);
            let rhs = geometric_w_element(&la, &mu);
            rep.check(lhs == rhs, || {
                format!("lambda={la} mu={mu}: lhs = {lhs}, rhs = {rhs}")
            });
        }
    }
    rep
}

/// `W(m) = (m)_{q,t} V* (m/√(qt))^{L_0} V` as `m`-series through `m^{m_order}`,
/// on blocks `a ← c` with `a, c ≤ max_deg`.
pub fn check_thm1(max_deg: u32, m_order: u32) -> Report {
    let mut rep = Report::new("thm1")
        .param("max_degree", max_deg)
        .param("m_order", m_order);
    let window = max_deg.max(m_order);
    let v = TruncOp::v_operator(window);
    let vs = v.adjoint();
    let w = TruncOp::w_operator(&FieldElem::m(), max_deg);
    let e = qt_pochhammer_series(m_order as usize);
    // V*_{a←k} V_{k←c}, shared over m-powers.
    let mut vv: BTreeMap<(u32, u32, u32), Matrix> = BTreeMap::new();
    for a in 0..=max_deg {
        for c in 0..=max_deg {
            for k in 0..=m_order {
                let x = vs.block(a, k).and_then(|s| Ok(mat_mul(&s, &v.block(k, c)?, partitions_of(k).len())));
                match x {
                    Ok(x) => {
                        vv.insert((a, c, k), x);
                    }
                    Err(err) => {
                        rep.check(false, || format!("block {a}<-{k}<-{c}: {err}"));
                    }
                }
            }
        }
    }
    for a in 0..=max_deg {
        for c in 0..=max_deg {
            let wb = match w.block(a, c) {
                Ok(b) => b,
                Err(err) => {
                    rep.check(false, || err.to_string());
                    continue;
                }
            };
            let outs = partitions_of(a);
            let ins = partitions_of(c);
            for (i, nu) in outs.iter().enumerate() {
                for (jx, mu) in ins.iter().enumerate() {
                    let Some(lhs) = wb[i][jx].coeffs_in_m() else {
                        rep.check(false, || format!("W entry {nu}<-{mu} is not polynomial in m"));
                        continue;
                    };
                    for j in 0..=m_order {
                        let l = lhs.get(j as usize).cloned().unwrap_or_else(FieldElem::zero);
                        let mut r = FieldElem::zero();
                        for k in 0..=j {
                            let Some(b) = vv.get(&(a, c, k)) else { continue };
                            let pref = e[(j - k) as usize]
                                .mul(&FieldElem::half_qt(-i64::from(k), -i64::from(k)));
                            r = r.add(&pref.mul(&b[i][jx]));
                        }
                        rep.check(l == r, || {
                            format!("block {a}<-{c} entry {nu}<-{mu} m^{j}: lhs = {l}, rhs = {r}")
                        });
                    }
                }
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::fe;
    use crate::partition::partition;

    #[test]
    fn alpha_examples() {
        assert!(alpha(0, &SymFunc::one()).is_err());
        assert_eq!(
            alpha(-1, &SymFunc::one()).unwrap(),
            SymFunc::pk(1).scale(&fe("1/((1-q)*(1-t))"))
        );
        assert_eq!(
            alpha(1, &SymFunc::pk(1)).unwrap(),
            SymFunc::constant(FieldElem::sqrt_qt())
        );
        let one = SymFunc::one();
        let c = alpha(1, &alpha(-1, &one).unwrap())
            .unwrap()
            .sub(&alpha(-1, &alpha(1, &one).unwrap()).unwrap());
        assert_eq!(c, SymFunc::constant(w_k(1).inv().unwrap()));
    }

    #[test]
    fn gamma_heads() {
        assert_eq!(
            gamma(Sign::Plus, &FieldElem::one(), &SymFunc::pk(1), 5),
            SymFunc::pk(1).add(&SymFunc::one())
        );
        let f = fe("q/(1-t)");
        let g = gamma(Sign::Minus, &f, &SymFunc::one(), 1);
        assert_eq!(g, SymFunc::one().add(&SymFunc::pk(1).scale(&f)));
    }

    #[test]
    fn phi_against_alpha_sums() {
        // e^{φ₊(z)} = exp(Σ_{n>0} z^n α_{-n} / n) on p_1 through degree 3.
        let z = VertexArg::new(fe("q*t/m")).unwrap();
        let f = SymFunc::pk(1);
        let mut direct = f.clone();
        let mut term = f.clone();
        for n in 1..=3 {
            let mut next = SymFunc::zero();
            for k in 1..=3i32 {
                let c = z.value().pow(i64::from(k)).div(&FieldElem::from_int(i64::from(k))).neg();
                next = next.add(&alpha(-k, &term).unwrap().scale(&c));
            }
            term = next.truncate(3).scale(&FieldElem::from_int(n).inv().unwrap());
            direct = direct.add(&term);
        }
        assert_eq!(e_phi_plus(&z, &f, 3), direct.truncate(3));
        // e^{φ₋(z)} = exp(Σ_{n>0} z^{-n} α_n / n).
        let g = SymFunc::pk(1).mul(&SymFunc::pk(2));
        let mut direct = g.clone();
        let mut term = g.clone();
        for n in 1..=3 {
            let mut next = SymFunc::zero();
            for k in 1..=3i32 {
                let c = z.value().pow(-i64::from(k)).div(&FieldElem::from_int(i64::from(k)));
                next = next.add(&alpha(k, &term).unwrap().scale(&c));
            }
            term = next.scale(&FieldElem::from_int(n).inv().unwrap());
            direct = direct.add(&term);
        }
        assert_eq!(e_phi_minus(&z, &g), direct);
    }

    #[test]
    fn v_examples() {
        let vh = op_v(&SymFunc::one(), 2);
        assert_eq!(herm(&SymFunc::pk(1), &vh), fe("q^(-1/2)*t^(-1/2)"));
        for mu in partitions_up_to(2) {
            assert_eq!(herm(&SymFunc::one(), &op_v(&modified_h(&mu), 2)), FieldElem::one());
        }
        let v1 = op_v(&modified_h(&partition(&[1])), 1);
        assert_eq!(
            herm(&SymFunc::pk(1), &v1),
            fe("q^(-1/2)*t^(-1/2)*(q + t - q*t)")
        );
    }

    #[test]
    fn w_examples() {
        let m = FieldElem::m();
        let w = TruncOp::w_operator(&m, 1);
        assert_eq!(w.trace_deg(0).unwrap(), FieldElem::one());
        let expect = fe("(m-q)*(m-t)/(q^(1/2)*t^(1/2)*(1-q)*(1-t))");
        assert_eq!(w.trace_deg(1).unwrap(), expect);
        assert_eq!(w.trace_deg_h(1).unwrap(), expect);
        let id = TruncOp::identity(0, 5);
        for d in 0..=5 {
            assert_eq!(id.trace_deg(d).unwrap(), FieldElem::from_int(partitions_of(d).len() as i64));
        }
        assert!(id.trace_deg(6).is_err());
    }

    #[test]
    fn adjoints() {
        let mult = TruncOp::from_action(0, 3, Some(1), Some(0), |f| f.mul(&SymFunc::pk(1)).truncate(3));
        let adj = mult.adjoint();
        let expect = TruncOp::from_action(0, 3, Some(0), Some(1), |f| f.derivative(1).scale(&w_k(1)));
        // The top input degree of `mult` is truncated, so compare where exact.
        for a in 0..=2 {
            for c in 0..=3 {
                assert_eq!(adj.block(a, c).unwrap(), expect.block(a, c).unwrap());
            }
        }
        let c = fe("q + m/t");
        let sc = TruncOp::identity(0, 2).scale(&c);
        assert_eq!(sc.adjoint(), TruncOp::identity(0, 2).scale(&c.conj()));
        let v = TruncOp::v_operator(2);
        assert_eq!(v.adjoint().adjoint(), v);
    }

    #[test]
    fn windows() {
        let a = TruncOp::alpha_operator(-1, 3).unwrap();
        let b = TruncOp::alpha_operator(1, 3).unwrap();
        let ab = b.compose(&a);
        // The top degree would need degree 4 in the middle.
        assert!(ab.block(3, 3).is_err());
        assert!(ab.block(2, 2).is_ok());
        let comm = ab.sub(&a.compose(&b)).unwrap();
        let one = comm.apply(&SymFunc::one()).unwrap();
        assert_eq!(one, SymFunc::constant(w_k(1).inv().unwrap()));
        assert!(a.apply(&SymFunc::pk(4)).is_err());
    }

    #[test]
    fn pochhammer_head() {
        let e = qt_pochhammer_series(2);
        assert_eq!(e[0], FieldElem::one());
        assert_eq!(e[1], fe("-1/((1-q)*(1-t))"));
    }

    #[test]
    fn small_identities() {
        assert!(check_heisenberg(2, 2).passed());
        assert!(check_comm_phi(2, 2).passed());
        assert!(check_thm2(2).passed());
        assert!(check_thm1(1, 2).passed());
        assert!(check_cor1(1).passed());
    }
}
