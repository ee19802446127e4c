//! Symmetric functions in the power-sum basis over [`FieldElem`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::FieldElem;
use crate::partition::{partitions_of, Partition};

/// Finite combination `Σ c_μ p_μ`; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, FieldElem>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Power,
    Monomial,
    Schur,
}

impl SymFunc {
    pub fn zero() -> SymFunc {
        SymFunc::default()
    }

    pub fn one() -> SymFunc {
        SymFunc::constant(FieldElem::one())
    }

    pub fn constant(c: FieldElem) -> SymFunc {
        SymFunc::term(Partition::empty(), c)
    }

    pub fn term(mu: Partition, c: FieldElem) -> SymFunc {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mu, c);
        }
        SymFunc { terms }
    }

    /// `p_μ`.
    pub fn p(mu: &Partition) -> SymFunc {
        SymFunc::term(mu.clone(), FieldElem::one())
    }

    /// `p_k`.
    pub fn pk(k: u32) -> SymFunc {
        SymFunc::p(&Partition::from_unsorted(vec![k]))
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, FieldElem)>>(it: I) -> SymFunc {
        let mut f = SymFunc::zero();
        for (mu, c) in it {
            f.add_term(mu, &c);
        }
        f
    }

    pub fn add_term(&mut self, mu: Partition, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, FieldElem> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Partition) -> FieldElem {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.size()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.size()).min()
    }

    /// The degree-`d` component.
    pub fn degree_part(&self, d: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.size() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Components of degree at most `d`.
    pub fn truncate(&self, d: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.size() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, o: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), &c.neg());
        }
        out
    }

    pub fn neg(&self) -> SymFunc {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, c: &FieldElem) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        self.map_coeffs(|x| x.mul(c))
    }

    pub fn mul(&self, o: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                out.add_term(a.union(b), &ca.mul(cb));
            }
        }
        out
    }

    /// Product, discarding everything above degree `d`.
    pub fn mul_truncated(&self, o: &SymFunc, d: u32) -> SymFunc {
        let mut out = SymFunc::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                if a.size() + b.size() <= d {
                    out.add_term(a.union(b), &ca.mul(cb));
                }
            }
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<F: Fn(&FieldElem) -> FieldElem>(&self, f: F) -> SymFunc {
        SymFunc::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// The algebra map `p_k ↦ w(k) p_k`.
    pub fn map_diagonal<F: Fn(u32) -> FieldElem>(&self, w: F) -> SymFunc {
        let mut cache: HashMap<u32, FieldElem> = HashMap::new();
        SymFunc::from_terms(self.terms.iter().map(|(m, c)| {
            let mut x = c.clone();
            for &k in m.parts() {
                let wk = cache.entry(k).or_insert_with(|| w(k));
                x = x.mul(wk);
            }
            (m.clone(), x)
        }))
    }

    /// `∂/∂p_n`.
    pub fn derivative(&self, n: u32) -> SymFunc {
        let mut out = SymFunc::zero();
        for (m, c) in &self.terms {
            let mult = m.parts().iter().filter(|&&k| k == n).count();
            if mult == 0 {
                continue;
            }
            let mut rest = m.parts().to_vec();
            let pos = rest.iter().position(|&k| k == n).unwrap();
            rest.remove(pos);
            out.add_term(
                Partition::from_unsorted(rest),
                &c.mul(&FieldElem::from_int(mult as i64)),
            );
        }
        out
    }

    /// The algebra map `p_k ↦ p_k + c(k)`.
    pub fn translate<F: Fn(u32) -> FieldElem>(&self, c: F) -> SymFunc {
        let mut cache: HashMap<u32, FieldElem> = HashMap::new();
        let mut out = SymFunc::zero();
        for (m, coef) in &self.terms {
            // Expand Π_k (p_k + c_k)^{m_k} factor by factor.
            let mut acc = SymFunc::constant(coef.clone());
            for (k, mk) in m.multiplicities() {
                let ck = cache.entry(k).or_insert_with(|| c(k)).clone();
                let mut factor = SymFunc::zero();
                let mut binom = BigInt::one();
                for j in 0..=mk {
                    // C(mk, j) c_k^{mk-j} p_k^j
                    let coeff = FieldElem::from_bigint(binom.clone()).mul(&ck.pow(i64::from(mk - j)));
                    factor.add_term(Partition::from_unsorted(vec![k; j as usize]), &coeff);
                    binom = binom * BigInt::from(mk - j) / BigInt::from(j + 1);
                }
                acc = acc.mul(&factor);
            }
            out = out.add(&acc);
        }
        out
    }

    pub fn omega(&self) -> SymFunc {
        self.map_diagonal(|k| FieldElem::from_int(if k % 2 == 1 { 1 } else { -1 }))
    }

    /// `Υ p_k = p_k / (1 - t^{-k})`, or its inverse.
    pub fn upsilon(&self, inverse: bool) -> SymFunc {
        self.map_diagonal(|k| {
            let f = FieldElem::one().sub(&FieldElem::half_qt(0, -2 * i64::from(k)));
            if inverse {
                f
            } else {
                f.inv().unwrap()
            }
        })
    }

    /// Coefficient-wise conjugation `q, t ↦ q⁻¹, t⁻¹`.
    pub fn conj_coeffs(&self) -> SymFunc {
        self.map_coeffs(|c| c.conj())
    }

    pub fn evaluate(&self, x: &AlphabetPoint) -> FieldElem {
        let mut cache: HashMap<u32, FieldElem> = HashMap::new();
        let mut acc = FieldElem::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &k in m.parts() {
                let v = cache.entry(k).or_insert_with(|| x.pk(k));
                t = t.mul(v);
                if t.is_zero() {
                    break;
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Stable `(partition, coefficient)` listing, sorted by degree then
    /// reverse-lexicographically.
    pub fn to_pairs(&self) -> Vec<(String, String)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.to_string(), c.to_string()))
            .collect()
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_empty() {
                    format!("[{c}]")
                } else {
                    format!("[{c}]*p{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pairs().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(String, String)> = Vec::deserialize(d)?;
        let mut f = SymFunc::zero();
        for (m, c) in pairs {
            let m: Partition = m.parse().map_err(serde::de::Error::custom)?;
            let c: FieldElem = c.parse().map_err(serde::de::Error::custom)?;
            f.add_term(m, &c);
        }
        Ok(f)
    }
}

// Inner products ------------------------------------------------------------

fn one_minus(a: i64, b: i64) -> FieldElem {
    FieldElem::one().sub(&FieldElem::half_qt(a, b))
}

/// `w(k) = (q^{k/2} - q^{-k/2})(t^{k/2} - t^{-k/2})`.
pub fn w_k(k: u32) -> FieldElem {
    let k = i64::from(k);
    let a = FieldElem::half_qt(k, 0).sub(&FieldElem::half_qt(-k, 0));
    let b = FieldElem::half_qt(0, k).sub(&FieldElem::half_qt(0, -k));
    a.mul(&b)
}

fn z_fe(mu: &Partition) -> FieldElem {
    FieldElem::from_bigint(mu.z())
}

/// `(p_μ, p_μ)_{q,t} = z_μ Π (1 - q^{μ_i}) / (1 - t^{μ_i})`.
pub fn weight_qt(mu: &Partition) -> FieldElem {
    mu.parts().iter().fold(z_fe(mu), |acc, &k| {
        let k = 2 * i64::from(k);
        acc.mul(&one_minus(k, 0).div(&one_minus(0, k)))
    })
}

/// `(p_μ, p_μ)' = z_μ Π (1 - q^{μ_i})(1 - t^{μ_i})`.
pub fn weight_prime(mu: &Partition) -> FieldElem {
    mu.parts().iter().fold(z_fe(mu), |acc, &k| {
        let k = 2 * i64::from(k);
        acc.mul(&one_minus(k, 0).mul(&one_minus(0, k)))
    })
}

/// `⟨p_μ, p_μ⟩ = z_μ Π w(μ_i)`.
pub fn weight_herm(mu: &Partition) -> FieldElem {
    mu.parts().iter().fold(z_fe(mu), |acc, &k| acc.mul(&w_k(k)))
}

fn diagonal_pairing<W: Fn(&Partition) -> FieldElem>(
    f: &SymFunc,
    g: &SymFunc,
    conj_first: bool,
    w: W,
) -> FieldElem {
    let mut acc = FieldElem::zero();
    for (m, a) in &f.terms {
        if let Some(b) = g.terms.get(m) {
            let a = if conj_first { a.conj() } else { a.clone() };
            acc = acc.add(&a.mul(b).mul(&w(m)));
        }
    }
    acc
}

/// The Macdonald inner product.
pub fn inner_qt(f: &SymFunc, g: &SymFunc) -> FieldElem {
    diagonal_pairing(f, g, false, weight_qt)
}

pub fn inner_prime(f: &SymFunc, g: &SymFunc) -> FieldElem {
    diagonal_pairing(f, g, false, weight_prime)
}

/// The Hermitian form, antilinear in the first slot.
pub fn herm(f: &SymFunc, g: &SymFunc) -> FieldElem {
    diagonal_pairing(f, g, true, weight_herm)
}

// Basis changes -------------------------------------------------------------

type RatMatrix = Vec<Vec<BigRational>>;

struct DegreeBasisData {
    parts: Vec<Partition>,
    /// `p_μ = Σ_λ pm[μ][λ] m_λ`
    pm: RatMatrix,
    /// `m_λ = Σ_μ mp[λ][μ] p_μ`
    mp: RatMatrix,
    /// `χ^λ(μ)`, indexed `[λ][μ]`
    chi: Vec<Vec<BigInt>>,
}

fn basis_data(n: u32) -> Arc<DegreeBasisData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<DegreeBasisData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&n) {
        return d.clone();
    }
    let parts = partitions_of(n);
    let pm: RatMatrix = parts
        .iter()
        .map(|mu| {
            parts
                .iter()
                .map(|la| BigRational::from_integer(BigInt::from(count_assignments(mu, la))))
                .collect()
        })
        .collect();
    let mp = invert(&pm);
    let chi = parts
        .iter()
        .map(|la| parts.iter().map(|mu| character(la, mu)).collect())
        .collect();
    let data = Arc::new(DegreeBasisData { parts, pm, mp, chi });
    cache.lock().unwrap().insert(n, data.clone());
    data
}

fn invert(a: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let mut m: RatMatrix = a.clone();
    let mut inv: RatMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("singular matrix");
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].clone();
        for j in 0..n {
            m[col][j] = &m[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..n {
                    let a = &m[col][j] * &f;
                    m[r][j] -= a;
                    let b = &inv[col][j] * &f;
                    inv[r][j] -= b;
                }
            }
        }
    }
    inv
}

/// Number of ways to send the parts of `mu` to the rows of `la` with the
/// row sums matching: the coefficient of `m_λ` in `p_μ`.
fn count_assignments(mu: &Partition, la: &Partition) -> u64 {
    fn go(parts: &[u32], cap: &mut Vec<u32>) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return u64::from(cap.iter().all(|&c| c == 0));
        };
        let mut total = 0;
        for i in 0..cap.len() {
            if cap[i] >= first {
                cap[i] -= first;
                total += go(rest, cap);
                cap[i] += first;
            }
        }
        total
    }
    if mu.size() != la.size() {
        return 0;
    }
    go(mu.parts(), &mut la.parts().to_vec())
}

/// Irreducible character `χ^λ` of the symmetric group at cycle type `μ`,
/// by the Murnaghan–Nakayama rule on beta-sets.
pub fn character(la: &Partition, mu: &Partition) -> BigInt {
    fn go(beta: &mut Vec<i64>, cycles: &[u32]) -> i64 {
        let Some((&k, rest)) = cycles.split_first() else {
            return 1;
        };
        let k = i64::from(k);
        let mut total = 0;
        for idx in 0..beta.len() {
            let b = beta[idx];
            let nb = b - k;
            if nb < 0 || beta.contains(&nb) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > nb && x < b).count();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            beta[idx] = nb;
            total += sign * go(beta, rest);
            beta[idx] = b;
        }
        total
    }
    if la.size() != mu.size() {
        return BigInt::zero();
    }
    let l = la.len() as i64;
    let mut beta: Vec<i64> = la
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i64::from(p) + l - 1 - i as i64)
        .collect();
    BigInt::from(go(&mut beta, mu.parts()))
}

/// Expansion coefficients of `f` in the requested basis.
pub fn basis_convert(f: &SymFunc, target: Basis) -> BTreeMap<Partition, FieldElem> {
    let mut out: BTreeMap<Partition, FieldElem> = BTreeMap::new();
    let mut push = |k: &Partition, c: FieldElem| {
        if c.is_zero() {
            return;
        }
        let e = out.entry(k.clone()).or_default();
        *e = e.add(&c);
        if e.is_zero() {
            out.remove(k);
        }
    };
    match target {
        Basis::Power => {
            for (m, c) in &f.terms {
                push(m, c.clone());
            }
        }
        Basis::Monomial => {
            for (mu, c) in &f.terms {
                let d = basis_data(mu.size());
                let i = d.parts.iter().position(|x| x == mu).unwrap();
                for (j, la) in d.parts.iter().enumerate() {
                    if !d.pm[i][j].is_zero() {
                        push(la, c.mul(&FieldElem::from_rational(&d.pm[i][j])));
                    }
                }
            }
        }
        Basis::Schur => {
            // p_μ = Σ_λ χ^λ(μ) s_λ
            for (mu, c) in &f.terms {
                let d = basis_data(mu.size());
                let j = d.parts.iter().position(|x| x == mu).unwrap();
                for (i, la) in d.parts.iter().enumerate() {
                    if !d.chi[i][j].is_zero() {
                        push(la, c.mul(&FieldElem::from_bigint(d.chi[i][j].clone())));
                    }
                }
            }
        }
    }
    out
}

/// `Σ c_λ b_λ` for the basis `b`.
pub fn from_basis(coeffs: &BTreeMap<Partition, FieldElem>, basis: Basis) -> SymFunc {
    let mut f = SymFunc::zero();
    for (la, c) in coeffs {
        f = f.add(&basis_element(la, basis).scale(c));
    }
    f
}

/// `m_λ`, `s_λ` or `p_λ` expanded in power sums.
pub fn basis_element(la: &Partition, basis: Basis) -> SymFunc {
    match basis {
        Basis::Power => SymFunc::p(la),
        Basis::Monomial => {
            let d = basis_data(la.size());
            let i = d.parts.iter().position(|x| x == la).unwrap();
            SymFunc::from_terms(
                d.parts
                    .iter()
                    .enumerate()
                    .map(|(j, mu)| (mu.clone(), FieldElem::from_rational(&d.mp[i][j]))),
            )
        }
        Basis::Schur => {
            let d = basis_data(la.size());
            let i = d.parts.iter().position(|x| x == la).unwrap();
            SymFunc::from_terms(d.parts.iter().enumerate().map(|(j, mu)| {
                let c = BigRational::new(d.chi[i][j].clone(), mu.z());
                (mu.clone(), FieldElem::from_rational(&c))
            }))
        }
    }
}

// Alphabets -----------------------------------------------------------------

pub type PkRule = Arc<dyn Fn(u32) -> FieldElem + Send + Sync>;

/// A point of the spectrum of the ring of symmetric functions, given by the
/// values of all power sums.
#[derive(Clone)]
pub enum AlphabetPoint {
    /// `p_k = Σ a_i^k`.
    Finite(Vec<FieldElem>),
    /// `p_k = a^k / (1 - r^k)`, the alphabet `a, ar, ar², …`.
    Geometric { first: FieldElem, ratio: FieldElem },
    /// Arbitrary closed-form rule.
    Rule(PkRule),
    /// `p_k ↦ -p_k(x)`.
    Negated(Box<AlphabetPoint>),
}

impl AlphabetPoint {
    pub fn rule<F: Fn(u32) -> FieldElem + Send + Sync + 'static>(f: F) -> AlphabetPoint {
        AlphabetPoint::Rule(Arc::new(f))
    }

    pub fn negated(&self) -> AlphabetPoint {
        AlphabetPoint::Negated(Box::new(self.clone()))
    }

    /// `q^{-μ-ρ} = (q^{-μ_1}, q^{-μ_2} t, q^{-μ_3} t², …)`, infinitely many
    /// variables.
    pub fn principal_mu_rho(mu: &Partition) -> AlphabetPoint {
        let mu = mu.clone();
        AlphabetPoint::rule(move |k| {
            let k = i64::from(k);
            let mut acc = FieldElem::one().div(&one_minus(0, 2 * k));
            for (i, &m) in mu.parts().iter().enumerate() {
                let term = FieldElem::half_qt(-2 * k * i64::from(m), 2 * k * i as i64)
                    .sub(&FieldElem::half_qt(0, 2 * k * i as i64));
                acc = acc.add(&term);
            }
            acc
        })
    }

    pub fn pk(&self, k: u32) -> FieldElem {
        match self {
            AlphabetPoint::Finite(xs) => xs.iter().map(|x| x.pow(i64::from(k))).sum(),
            AlphabetPoint::Geometric { first, ratio } => {
                let k = i64::from(k);
                first.pow(k).div(&FieldElem::one().sub(&ratio.pow(k)))
            }
            AlphabetPoint::Rule(f) => f(k),
            AlphabetPoint::Negated(x) => x.pk(k).neg(),
        }
    }
}

impl fmt::Debug for AlphabetPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphabetPoint::Finite(xs) => write!(f, "Finite({xs:?})"),
            AlphabetPoint::Geometric { first, ratio } => {
                write!(f, "Geometric({first}, {ratio})")
            }
            AlphabetPoint::Rule(_) => write!(f, "Rule"),
            AlphabetPoint::Negated(x) => write!(f, "Negated({x:?})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::fe;
    use crate::partition::partition;

    #[test]
    fn schur_degree_two() {
        let s2 = basis_element(&partition(&[2]), Basis::Schur);
        let expect = SymFunc::p(&partition(&[1, 1]))
            .add(&SymFunc::pk(2))
            .scale(&fe("1/2"));
        assert_eq!(s2, expect);
        let s11 = basis_element(&partition(&[1, 1]), Basis::Schur);
        let expect = SymFunc::p(&partition(&[1, 1]))
            .sub(&SymFunc::pk(2))
            .scale(&fe("1/2"));
        assert_eq!(s11, expect);
        assert_eq!(basis_element(&partition(&[1]), Basis::Monomial), SymFunc::pk(1));
    }

    #[test]
    fn pairings() {
        let p1 = SymFunc::pk(1);
        let p2 = SymFunc::pk(2);
        assert_eq!(inner_qt(&p1, &p1), fe("(1-q)/(1-t)"));
        assert!(inner_qt(&p1, &p2).is_zero());
        assert_eq!(inner_qt(&p2, &p2), fe("2*(1-q^2)/(1-t^2)"));
        assert_eq!(inner_prime(&p1, &p1), fe("(1-q)*(1-t)"));
        assert_eq!(herm(&p1.scale(&fe("q")), &p1), fe("q^-1*(q^(1/2)-q^(-1/2))*(t^(1/2)-t^(-1/2))"));
        assert_eq!(herm(&p2, &p2), fe("2*(q-q^-1)*(t-t^-1)"));
    }

    #[test]
    fn involutions() {
        assert_eq!(SymFunc::pk(2).omega(), SymFunc::pk(2).neg());
        let f = SymFunc::p(&partition(&[1, 1]));
        assert_eq!(f.upsilon(false), f.scale(&fe("1/(1-t^-1)^2")));
        assert_eq!(f.upsilon(false).upsilon(true), f);
    }

    #[test]
    fn principal_empty() {
        let x = AlphabetPoint::principal_mu_rho(&Partition::empty());
        assert_eq!(x.pk(3), fe("1/(1-t^3)"));
        let ab = AlphabetPoint::Finite(vec![fe("q"), fe("m")]);
        assert_eq!(SymFunc::pk(1).evaluate(&ab), fe("q+m"));
        assert_eq!(SymFunc::pk(2).evaluate(&ab.negated()), fe("-q^2-m^2"));
    }

    #[test]
    fn translation_matches_binomial() {
        let f = SymFunc::p(&partition(&[1, 1]));
        let g = f.translate(|_| fe("m"));
        let expect = f
            .add(&SymFunc::pk(1).scale(&fe("2*m")))
            .add(&SymFunc::constant(fe("m^2")));
        assert_eq!(g, expect);
        assert_eq!(f.derivative(1), SymFunc::pk(1).scale(&fe("2")));
    }
}
