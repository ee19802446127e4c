//! Sparse integer polynomials in the three generators `u`, `v`, `m`.
//!
//! These are the numerators and denominators of [`crate::field::FieldElem`].
//! Terms are kept sorted by a graded-lexicographic order on `(u, v, m)`,
//! largest first, with no zero coefficients.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Number of polynomial generators.
pub const NVARS: usize = 3;

const FIELD_BITS: u32 = 16;
const FIELD_MASK: u64 = (1 << FIELD_BITS) - 1;
const MAX_EXP: u32 = FIELD_MASK as u32;

/// Packed exponent vector. Integer comparison of the packed word is the
/// graded-lex order `deg, u, v, m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Mono(u64);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn new(e: [u32; NVARS]) -> Mono {
        let deg: u32 = e.iter().sum();
        assert!(
            deg <= MAX_EXP,
            "monomial degree {deg} exceeds the packed exponent range"
        );
        Mono(
            (u64::from(deg) << (3 * FIELD_BITS))
                | (u64::from(e[0]) << (2 * FIELD_BITS))
                | (u64::from(e[1]) << FIELD_BITS)
                | u64::from(e[2]),
        )
    }

    pub fn var(i: usize, e: u32) -> Mono {
        let mut x = [0; NVARS];
        x[i] = e;
        Mono::new(x)
    }

    #[inline]
    pub fn exp(self, i: usize) -> u32 {
        ((self.0 >> ((2 - i) as u32 * FIELD_BITS)) & FIELD_MASK) as u32
    }

    pub fn exps(self) -> [u32; NVARS] {
        [self.exp(0), self.exp(1), self.exp(2)]
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> (3 * FIELD_BITS)) as u32
    }

    #[inline]
    pub fn mul(self, o: Mono) -> Mono {
        assert!(
            self.degree() + o.degree() <= MAX_EXP,
            "monomial degree overflow"
        );
        Mono(self.0 + o.0)
    }

    #[inline]
    pub fn divides(self, o: Mono) -> bool {
        (0..NVARS).all(|i| self.exp(i) <= o.exp(i))
    }

    /// `o / self`, assuming `self` divides `o`.
    #[inline]
    pub fn div_into(self, o: Mono) -> Mono {
        debug_assert!(self.divides(o));
        Mono(o.0 - self.0)
    }

    pub fn gcd(self, o: Mono) -> Mono {
        let a = self.exps();
        let b = o.exps();
        Mono::new([a[0].min(b[0]), a[1].min(b[1]), a[2].min(b[2])])
    }

    pub fn pow(self, k: u32) -> Mono {
        let e = self.exps();
        Mono::new([e[0] * k, e[1] * k, e[2] * k])
    }
}

/// A polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, BigInt)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Mono::ONE, c)],
            }
        }
    }

    pub fn monomial(m: Mono, c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(i: usize) -> Poly {
        Poly::monomial(Mono::var(i, 1), BigInt::one())
    }

    /// Builds a polynomial from unsorted terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Mono, BigInt)>>(it: I) -> Poly {
        let mut map: HashMap<Mono, BigInt> = HashMap::new();
        for (m, c) in it {
            if c.is_zero() {
                continue;
            }
            *map.entry(m).or_default() += c;
        }
        Poly::from_map(map)
    }

    fn from_map(map: HashMap<Mono, BigInt>) -> Poly {
        let mut terms: Vec<(Mono, BigInt)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mono::ONE)
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == Mono::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term in graded-lex order.
    pub fn lead(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    pub fn lead_coeff(&self) -> BigInt {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).min().unwrap_or(0)
    }

    pub fn vars(&self) -> [bool; NVARS] {
        let mut out = [false; NVARS];
        for (m, _) in &self.terms {
            for (i, o) in out.iter_mut().enumerate() {
                if m.exp(i) > 0 {
                    *o = true;
                }
            }
        }
        out
    }

    /// Largest monomial dividing every term.
    pub fn mono_content(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Mono::ONE;
        };
        it.fold(*first, |acc, (m, _)| acc.gcd(*m))
    }

    /// Gcd of the integer coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.merge(o, true)
    }

    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() || j < b.len() {
            if j >= b.len() || (i < a.len() && a[i].0 > b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i >= a.len() || b[j].0 > a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Poly { terms: out }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return o.mul_term(*m, c);
        }
        if o.is_monomial() {
            let (m, c) = &o.terms[0];
            return self.mul_term(*m, c);
        }
        let mut map: HashMap<Mono, BigInt> =
            HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let e = map.entry(ma.mul(*mb)).or_default();
                *e += ca * cb;
            }
        }
        Poly::from_map(map)
    }

    pub fn mul_term(&self, m: Mono, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(Mono::ONE, c)
    }

    /// Divides every coefficient by `c`; `c` must divide all of them.
    pub fn div_int_exact(&self, c: &BigInt) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, cc)| {
                    let (qq, r) = cc.div_rem(c);
                    debug_assert!(r.is_zero(), "inexact integer division");
                    (*m, qq)
                })
                .collect(),
        }
    }

    /// Divides by a monomial that divides every term.
    pub fn div_mono(&self, m: Mono) -> Poly {
        if m == Mono::ONE {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (m.div_into(*mm), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Exact division. Returns `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.is_monomial() {
            let (dm, dc) = &d.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(*m) {
                    return None;
                }
                let (qq, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((dm.div_into(*m), qq));
            }
            return Some(Poly { terms });
        }
        for i in 0..NVARS {
            if d.degree_in(i) > self.degree_in(i) || d.min_degree_in(i) > self.min_degree_in(i) {
                return None;
            }
        }
        let (dl, dc) = d.terms[0].clone();
        let mut rem: std::collections::BTreeMap<Mono, BigInt> =
            self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((&m, c)) = rem.iter().next_back() {
            if !dl.divides(m) {
                return None;
            }
            let (qq, r) = c.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let qm = dl.div_into(m);
            for (tm, tc) in &d.terms {
                let key = tm.mul(qm);
                let prod = tc * &qq;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= prod;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-prod);
                    }
                }
            }
            quot.push((qm, qq));
        }
        // Quotient terms were produced in decreasing order.
        Some(Poly { terms: quot })
    }

    /// Substitutes the integer `x` for variable `var`.
    pub fn eval_var(&self, var: usize, x: &BigInt) -> Poly {
        let maxd = self.degree_in(var) as usize;
        let mut pows = Vec::with_capacity(maxd + 1);
        pows.push(BigInt::one());
        for i in 1..=maxd {
            let p = &pows[i - 1] * x;
            pows.push(p);
        }
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = m.exps();
            let k = e[var] as usize;
            e[var] = 0;
            (Mono::new(e), c * &pows[k])
        }))
    }

    /// Splits into coefficients of powers of `var`: `self = Σ x^k · c_k`.
    /// Returned in increasing order of `k`, zero coefficients skipped.
    pub fn coeffs_in(&self, var: usize) -> Vec<(u32, Poly)> {
        let mut buckets: std::collections::BTreeMap<u32, Vec<(Mono, BigInt)>> =
            std::collections::BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.exps();
            let k = e[var];
            e[var] = 0;
            buckets.entry(k).or_default().push((Mono::new(e), c.clone()));
        }
        buckets
            .into_iter()
            .map(|(k, ts)| (k, Poly::from_terms(ts)))
            .collect()
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs_in(var: usize, coeffs: &[(u32, Poly)]) -> Poly {
        Poly::from_terms(coeffs.iter().flat_map(|(k, p)| {
            let xm = Mono::var(var, *k);
            p.terms.iter().map(move |(m, c)| (m.mul(xm), c.clone()))
        }))
    }

    /// Applies an exponent map to every monomial. The map must be injective
    /// on the support for the result to keep all terms distinct; duplicates
    /// are merged regardless.
    pub fn map_monomials<F: Fn([u32; NVARS]) -> [u32; NVARS]>(&self, f: F) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Mono::new(f(m.exps())), c.clone())),
        )
    }

    /// Makes the leading coefficient positive.
    pub fn normalize_sign(self) -> Poly {
        if self.lead_coeff().is_negative() {
            self.neg()
        } else {
            self
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = ["u", "v", "m"];
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (k, e) in m.exps().iter().enumerate() {
                if *e > 0 {
                    write!(f, "*{}^{}", names[k], e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[([u32; 3], i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|(e, c)| (Mono::new(*e), BigInt::from(*c))))
    }

    #[test]
    fn packed_order_is_graded_lex() {
        let a = Mono::new([1, 0, 0]);
        let b = Mono::new([0, 2, 0]);
        let c = Mono::new([0, 1, 0]);
        assert!(b > a);
        assert!(a > c);
        assert_eq!(Mono::new([2, 3, 4]).exps(), [2, 3, 4]);
        assert_eq!(Mono::new([2, 3, 4]).degree(), 9);
    }

    #[test]
    fn exact_division_round_trips() {
        let a = p(&[([1, 0, 0], 1), ([0, 1, 0], -1)]);
        let b = p(&[([2, 0, 0], 3), ([0, 0, 1], 2), ([0, 0, 0], -7)]);
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(b.div_exact(&a), None);
    }

    #[test]
    fn coefficient_split_inverts() {
        let a = p(&[([2, 1, 0], 5), ([0, 1, 3], -1), ([1, 0, 0], 2)]);
        let cs = a.coeffs_in(1);
        assert_eq!(Poly::from_coeffs_in(1, &cs), a);
    }
}
