//! Five-dimensional partition functions: instanton traces of products of
//! `W(m)` operators, the closed `N=2*` formula and the perturbative factor.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::fock::{exp_series, TruncOp};
use crate::localization::geometric_w_element;
use crate::macdonald::record;
use crate::partition::{partitions_of, Partition};
use crate::report::Report;

/// An `A_r` quiver: one mass per node; the couplings `𝔮_0..𝔮_r` are grading
/// markers.
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverSpec {
    pub r: usize,
    pub masses: Vec<FieldElem>,
}

impl QuiverSpec {
    pub fn new(masses: Vec<FieldElem>) -> Result<QuiverSpec> {
        if masses.is_empty() {
            return Err(Error::Domain("a quiver needs at least one node".into()));
        }
        if masses.iter().any(FieldElem::is_zero) {
            return Err(Error::Domain("masses must be nonzero".into()));
        }
        Ok(QuiverSpec {
            r: masses.len() - 1,
            masses,
        })
    }

    /// The `N=2*` theory: one node with mass `m`.
    pub fn single() -> QuiverSpec {
        QuiverSpec {
            r: 0,
            masses: vec![FieldElem::m()],
        }
    }
}

/// Coefficients keyed by the multi-degree in the couplings.
pub type MultiSeries = BTreeMap<Vec<u32>, FieldElem>;

fn compositions(parts: usize, total_max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn go(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for d in 0..=left {
            cur.push(d);
            go(k - 1, left - d, cur, out);
            cur.pop();
        }
    }
    go(parts, total_max, &mut Vec::new(), &mut out);
    out
}

fn mat_mul(a: &[Vec<FieldElem>], b: &[Vec<FieldElem>]) -> Vec<Vec<FieldElem>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, br)| x.mul(&br[j]))
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// `Tr Π_i 𝔮_i^{L_0} W(m_i)` through total degree `order`, from `p`-basis blocks:
/// the coefficient of `Π 𝔮_i^{d_i}` is `Tr W(m_0)_{d_0←d_1} W(m_1)_{d_1←d_2} ⋯ W(m_r)_{d_r←d_0}`.
pub fn z_inst_trace(spec: &QuiverSpec, order: u32) -> Result<MultiSeries> {
    let ops: Vec<TruncOp> = spec
        .masses
        .iter()
        .map(|m| TruncOp::w_operator(m, order))
        .collect();
    let mut out = MultiSeries::new();
    for ds in compositions(spec.r + 1, order) {
        let n = ds.len();
        let mut acc = ops[0].block(ds[0], ds[1 % n])?;
        for i in 1..n {
            acc = mat_mul(&acc, &ops[i].block(ds[i], ds[(i + 1) % n])?);
        }
        let tr: FieldElem = (0..acc.len()).map(|i| acc[i][i].clone()).sum();
        if !tr.is_zero() {
            out.insert(ds, tr);
        }
    }
    Ok(out)
}

/// The single-node trace computed in the `H` basis.
pub fn z_inst_trace_h(m: &FieldElem, order: u32) -> Result<Vec<FieldElem>> {
    let w = TruncOp::w_operator(m, order);
    (0..=order).map(|d| w.trace_deg_h(d)).collect()
}

/// The same trace as a sum over fixed points `(λ_0, …, λ_r)`, using the
/// localization formula for the `H`-basis matrix elements of `W(m_i)`.
pub fn z_inst_fixed_points(spec: &QuiverSpec, order: u32) -> Result<MultiSeries> {
    let mut out = MultiSeries::new();
    for ds in compositions(spec.r + 1, order) {
        let n = ds.len();
        let choices: Vec<Vec<Partition>> = ds.iter().map(|&d| partitions_of(d)).collect();
        let mut acc = FieldElem::zero();
        let mut idx = vec![0usize; n];
        loop {
            let las: Vec<&Partition> = (0..n).map(|i| &choices[i][idx[i]]).collect();
            let mut term = FieldElem::one();
            for i in 0..n {
                let (a, b) = (las[i], las[(i + 1) % n]);
                let w = geometric_w_element(a, b).subst_m(&spec.masses[i])?;
                term = term.mul(&w).div(&record(a).norm_herm);
                if term.is_zero() {
                    break;
                }
            }
            acc = acc.add(&term);
            let mut i = 0;
            while i < n {
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        if !acc.is_zero() {
            out.insert(ds, acc);
        }
    }
    Ok(out)
}

/// `B_n = (m^n - q^n)(m^n - t^n) / ((1-q^n)(1-t^n))`.
fn b_n(n: u32) -> FieldElem {
    let m = FieldElem::m().pow(i64::from(n));
    let q = FieldElem::q().pow(i64::from(n));
    let t = FieldElem::t().pow(i64::from(n));
    m.sub(&q)
        .mul(&m.sub(&t))
        .div(&FieldElem::one().sub(&q).mul(&FieldElem::one().sub(&t)))
}

/// `exp Σ_n Q^n/(n m^n) · B_n/(1 - Q^n)` with `Q = 𝔮 m/√(qt)`, through `𝔮^order`.
/// With `redefine_mass` the result is taken at `m ↦ m q t`.
pub fn z_inst_closed(order: u32, redefine_mass: bool) -> Vec<FieldElem> {
    let x = FieldElem::m().div(&FieldElem::sqrt_qt());
    let mut log = vec![FieldElem::zero(); order as usize + 1];
    for (d, slot) in log.iter_mut().enumerate().skip(1) {
        let d = d as u32;
        let mut acc = FieldElem::zero();
        for n in (1..=d).filter(|n| d.is_multiple_of(*n)) {
            let c = b_n(n).div(&FieldElem::m().pow(i64::from(n)).scale_int(i64::from(n)));
            acc = acc.add(&c);
        }
        *slot = acc.mul(&x.pow(i64::from(d)));
    }
    let z = exp_series(&log, order as usize);
    if !redefine_mass {
        return z;
    }
    let shifted = FieldElem::m().mul(&FieldElem::half_qt(2, 2));
    z.iter()
        .map(|c| c.subst_m(&shifted).expect("m q t is nonzero"))
        .collect()
}

/// `Z^pert = exp Σ_n (qt)^n (1-m^n) / (n (1-q^n)(1-t^n))`, graded by total
/// `(q,t)`-degree through `order`, via the exponential recurrence.
pub fn z_pert(order: u32) -> Vec<FieldElem> {
    let mut log = vec![FieldElem::zero(); order as usize + 1];
    // (qt)^n/((1-q^n)(1-t^n)) = Σ_{a,b≥0} q^{n(a+1)} t^{n(b+1)}, degree n(a+b+2).
    for n in 1..=order / 2 {
        let c = FieldElem::one()
            .sub(&FieldElem::m().pow(i64::from(n)))
            .div(&FieldElem::from_int(i64::from(n)));
        for a in 0..order {
            for b in 0..order {
                let deg = n * (a + b + 2);
                if deg > order {
                    continue;
                }
                let mono = FieldElem::half_qt(2 * i64::from(n * (a + 1)), 2 * i64::from(n * (b + 1)));
                log[deg as usize] = log[deg as usize].add(&mono.mul(&c));
            }
        }
    }
    exp_series(&log, order as usize)
}

/// `Π_{a,b≥0} (1 - m q^{a+1} t^{b+1}) / (1 - q^{a+1} t^{b+1})`, graded the
/// same way.
pub fn z_pert_product(order: u32) -> Vec<FieldElem> {
    let n = order as usize;
    let mut acc = vec![FieldElem::zero(); n + 1];
    acc[0] = FieldElem::one();
    let one_minus_m = FieldElem::one().sub(&FieldElem::m());
    for a in 0..order {
        for b in 0..order {
            let s = (a + b + 2) as usize;
            if s > n {
                continue;
            }
            // (1 - m x)/(1 - x) = 1 + (1 - m) Σ_{j≥1} x^j.
            let x = FieldElem::half_qt(2 * i64::from(a + 1), 2 * i64::from(b + 1));
            let mut factor = vec![FieldElem::zero(); n + 1];
            factor[0] = FieldElem::one();
            let mut j = 1;
            while j * s <= n {
                factor[j * s] = one_minus_m.mul(&x.pow(j as i64));
                j += 1;
            }
            let mut next = vec![FieldElem::zero(); n + 1];
            for (i, ai) in acc.iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                for (k, fk) in factor.iter().enumerate().take(n + 1 - i) {
                    if !fk.is_zero() {
                        next[i + k] = next[i + k].add(&ai.mul(fk));
                    }
                }
            }
            acc = next;
        }
    }
    acc
}

/// The `𝔮_1⁰` slice of the two-node trace in closed form:
/// `exp Σ_k Q^k (1 - m_1^k)((qt)^k/m_0^k - 1) / (k (1-q^k)(1-t^k))`, `Q = 𝔮_0 m_0/√(qt)`.
pub fn z_slice_closed(m0: &FieldElem, m1: &FieldElem, order: u32) -> Vec<FieldElem> {
    let x = m0.div(&FieldElem::sqrt_qt());
    let qt = FieldElem::half_qt(2, 2);
    let mut log = vec![FieldElem::zero(); order as usize + 1];
    for (k, slot) in log.iter_mut().enumerate().skip(1) {
        let k = k as i64;
        let den = FieldElem::one()
            .sub(&FieldElem::q().pow(k))
            .mul(&FieldElem::one().sub(&FieldElem::t().pow(k)))
            .scale_int(k);
        *slot = x
            .pow(k)
            .mul(&FieldElem::one().sub(&m1.pow(k)))
            .mul(&qt.pow(k).div(&m0.pow(k)).sub(&FieldElem::one()))
            .div(&den);
    }
    exp_series(&log, order as usize)
}

/// Single-node trace against the closed formula, coefficient by coefficient.
pub fn compare_zfun(order: u32, redefine_mass: bool) -> Result<Report> {
    let mut rep = Report::new("zfun")
        .param("r", 0)
        .param("order", order)
        .param("redefine_mass", redefine_mass);
    let trace = z_inst_trace(&QuiverSpec::single(), order)?;
    let closed = z_inst_closed(order, redefine_mass);
    for d in 0..=order {
        let l = trace.get(&vec![d]).cloned().unwrap_or_else(FieldElem::zero);
        let r = closed[d as usize].clone();
        rep.row(format!("trace.{d}"), &l);
        rep.row(format!("closed.{d}"), &r);
        rep.check(l == r, || format!("coefficient of q0^{d}: trace = {l}, closed = {r}"));
    }
    Ok(rep)
}

/// Perturbative factor: both expansions agree and reduce to `1` at `m = 1`.
pub fn check_pert(order: u32) -> Report {
    let mut rep = Report::new("zpert").param("order", order);
    let a = z_pert(order);
    let b = z_pert_product(order);
    for (d, (x, y)) in a.iter().zip(&b).enumerate() {
        rep.row(format!("deg.{d}"), x);
        rep.check(x == y, || format!("degree {d}: exponential = {x}, product = {y}"));
        let at1 = x.subst_m(&FieldElem::one()).unwrap();
        let expect = if d == 0 { FieldElem::one() } else { FieldElem::zero() };
        rep.check(at1 == expect, || format!("degree {d} at m = 1: {at1}"));
    }
    rep
}

/// Quiver traces against the fixed-point sum and, for two nodes, the
/// `𝔮_1⁰` slice against its closed form.
pub fn check_quiver(spec: &QuiverSpec, order: u32) -> Result<Report> {
    let mut rep = Report::new("quiver").param("r", spec.r).param("order", order);
    let tr = z_inst_trace(spec, order)?;
    let fp = z_inst_fixed_points(spec, order)?;
    let keys: std::collections::BTreeSet<&Vec<u32>> = tr.keys().chain(fp.keys()).collect();
    for k in keys {
        let l = tr.get(k).cloned().unwrap_or_else(FieldElem::zero);
        let r = fp.get(k).cloned().unwrap_or_else(FieldElem::zero);
        rep.check(l == r, || format!("multi-degree {k:?}: trace = {l}, fixed points = {r}"));
    }
    if spec.r == 1 {
        let slice = z_slice_closed(&spec.masses[0], &spec.masses[1], order);
        for (d, c) in slice.iter().enumerate() {
            let l = tr.get(&vec![d as u32, 0]).cloned().unwrap_or_else(FieldElem::zero);
            rep.check(&l == c, || format!("q1^0 slice at q0^{d}: trace = {l}, closed = {c}"));
        }
    }
    Ok(rep)
}

pub fn check_basis_independence(order: u32) -> Result<Report> {
    let mut rep = Report::new("trace_basis").param("order", order);
    let m = FieldElem::m();
    let w = TruncOp::w_operator(&m, order);
    for d in 0..=order {
        let a = w.trace_deg(d)?;
        let b = w.trace_deg_h(d)?;
        rep.check(a == b, || format!("degree {d}: p basis = {a}, H basis = {b}"));
    }
    Ok(rep)
}

pub fn check_qt_symmetry(order: u32) -> Report {
    let mut rep = Report::new("closed_qt_symmetry").param("order", order);
    for (d, c) in z_inst_closed(order, false).iter().enumerate() {
        let s = c.swap_qt();
        rep.check(&s == c, || format!("degree {d}: {c} vs swapped {s}"));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::fe;

    #[test]
    fn closed_head() {
        let z = z_inst_closed(1, false);
        assert_eq!(z[0], FieldElem::one());
        assert_eq!(z[1], fe("(m-q)*(m-t)/(q^(1/2)*t^(1/2)*(1-q)*(1-t))"));
        let at = z[1].subst_m(&FieldElem::sqrt_qt()).unwrap();
        assert_eq!(
            at,
            fe("(q^(1/2)*t^(1/2)-q)*(q^(1/2)*t^(1/2)-t)/(q^(1/2)*t^(1/2)*(1-q)*(1-t))")
        );
        assert_eq!(z[1].subst_m(&FieldElem::one()).unwrap(), fe("q^(-1/2)*t^(-1/2)"));
    }

    #[test]
    fn pert_head() {
        let p = z_pert(2);
        assert_eq!(p[1], FieldElem::zero());
        assert_eq!(p[2], fe("q*t*(1-m)"));
        assert!(check_pert(4).passed());
    }

    #[test]
    fn low_order() {
        assert!(compare_zfun(0, false).unwrap().passed());
        assert!(compare_zfun(2, false).unwrap().passed());
        assert!(check_qt_symmetry(3).passed());
        let spec = QuiverSpec::new(vec![FieldElem::m(), FieldElem::from_int(2)]).unwrap();
        let rq = check_quiver(&spec, 2).unwrap();
        assert!(rq.passed(), "{}", rq.to_text());
        assert!(QuiverSpec::new(vec![]).is_err());
    }
}
