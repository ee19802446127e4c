//! Constant-term identities of Macdonald–Mehta–Cherednik type: a finite-`N`
//! engine at `t = q^k`, the theta function and its triple product, and the
//! infinite-`N` symmetric-function form.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldElem, M, U, V};
use crate::fock::{gamma_minus_with, gamma_plus_with};
use crate::macdonald::macdonald_p;
use crate::partition::{partitions_up_to, Partition};
use crate::report::{Report, Status};
use crate::symfunc::{inner_qt, AlphabetPoint, SymFunc};

// q-series -------------------------------------------------------------------

/// A truncated series in `q^{1/2}`. Keys are doubled exponents; every
/// coefficient with key `< prec` is exact.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: BTreeMap<i64, BigRational>,
    prec: i64,
}

impl QSeries {
    pub fn zero(prec: i64) -> QSeries {
        QSeries {
            coeffs: BTreeMap::new(),
            prec,
        }
    }

    pub fn one(prec: i64) -> QSeries {
        QSeries::monomial(0, BigRational::one(), prec)
    }

    /// `c q^{half/2}`.
    pub fn monomial(half: i64, c: BigRational, prec: i64) -> QSeries {
        let mut s = QSeries::zero(prec);
        s.add_term(half, c);
        s
    }

    fn add_term(&mut self, half: i64, c: BigRational) {
        if half >= self.prec || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(half).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&half);
        }
    }

    /// Doubled-exponent precision.
    pub fn prec(&self) -> i64 {
        self.prec
    }

    pub fn coeff(&self, half: i64) -> BigRational {
        self.coeffs.get(&half).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigRational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest doubled exponent present, or `prec` for the zero series.
    pub fn valuation(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.prec)
    }

    pub fn add(&self, o: &QSeries) -> QSeries {
        let mut out = QSeries::zero(self.prec.min(o.prec));
        for (&k, c) in self.coeffs.iter().chain(&o.coeffs) {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
            prec: self.prec,
        }
    }

    pub fn sub(&self, o: &QSeries) -> QSeries {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &QSeries) -> QSeries {
        let prec = (self.prec + o.valuation()).min(o.prec + self.valuation());
        let mut out = QSeries::zero(prec);
        for (&a, x) in &self.coeffs {
            for (&b, y) in &o.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> QSeries {
        let mut out = QSeries::zero(self.prec);
        for (&k, x) in &self.coeffs {
            out.add_term(k, x * c);
        }
        out
    }

    /// Laurent expansion in `u = q^{1/2}` of an element free of `t` and `m`.
    pub fn from_field(f: &FieldElem, prec: i64) -> Result<QSeries> {
        let (num, den) = (f.numer(), f.denom());
        for p in [num, den] {
            if p.degree_in(V) > 0 || p.degree_in(M) > 0 {
                return Err(Error::Domain(format!("{f} is not a function of q alone")));
            }
        }
        let dense = |p: &crate::poly::Poly| -> (i64, Vec<BigInt>) {
            let lo = p.min_degree_in(U);
            let hi = p.degree_in(U);
            let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
            for (m, c) in p.terms() {
                v[(m.exp(U) - lo) as usize] += c;
            }
            (i64::from(lo), v)
        };
        let (nlo, n) = dense(num);
        let (dlo, d) = dense(den);
        let shift = nlo - dlo;
        let mut out = QSeries::zero(prec);
        if f.is_zero() {
            return Ok(out);
        }
        // Power series n(u)/d(u) with d(0) ≠ 0, needed up to u^{prec - shift - 1}.
        let need = prec - shift;
        if need <= 0 {
            return Ok(out);
        }
        let d0 = BigRational::from_integer(d[0].clone());
        let mut c: Vec<BigRational> = Vec::with_capacity(need as usize);
        for i in 0..need as usize {
            let mut acc = n.get(i).map_or_else(BigRational::zero, |x| BigRational::from_integer(x.clone()));
            for j in 1..=i.min(d.len() - 1) {
                acc -= BigRational::from_integer(d[j].clone()) * &c[i - j];
            }
            c.push(acc / &d0);
        }
        for (i, x) in c.into_iter().enumerate() {
            out.add_term(i as i64 + shift, x);
        }
        Ok(out)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&k, c) in &self.coeffs {
            let (sign, c) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mono = match (k, k % 2 == 0) {
                (0, _) => String::new(),
                (2, _) => "q".to_string(),
                (k, true) => format!("q^{}", k / 2),
                (k, false) => format!("q^({k}/2)"),
            };
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{c}*{mono}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^({}/2))", self.prec)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A series in one variable `x` with [`QSeries`] coefficients.
pub type XSeries = BTreeMap<i64, QSeries>;

fn xs_mul(a: &XSeries, b: &XSeries, prec: i64) -> XSeries {
    let mut out: XSeries = BTreeMap::new();
    for (&i, x) in a {
        for (&j, y) in b {
            let p = x.mul(y);
            let e = out.entry(i + j).or_insert_with(|| QSeries::zero(prec));
            *e = e.add(&p);
        }
    }
    out.retain(|_, s| !s.is_zero());
    out
}

/// `ϑ(x) = Σ_n x^n q^{n²/2}`, all terms with `q`-exponent `< prec`.
pub fn theta_series(prec: u32) -> XSeries {
    let p2 = 2 * i64::from(prec);
    let mut out = BTreeMap::new();
    let mut n = 0i64;
    while n * n < p2 {
        for s in if n == 0 { vec![0] } else { vec![n, -n] } {
            out.insert(s, QSeries::monomial(n * n, BigRational::one(), p2));
        }
        n += 1;
    }
    out
}

/// `Θ₊(x) = exp(Σ_k (-1)^{k+1} x^k q^{k/2} / (k (1-q^k)))`.
fn theta_plus(prec: i64) -> XSeries {
    // log coefficients l_k; x^k has q-valuation ≥ k²/2 in the exponential.
    let mut kmax = 0i64;
    while (kmax + 1) * (kmax + 1) < prec {
        kmax += 1;
    }
    let log: Vec<QSeries> = (0..=kmax)
        .map(|k| {
            let mut s = QSeries::zero(prec);
            if k > 0 {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                let c = BigRational::new(BigInt::from(sign), BigInt::from(k));
                let mut e = k;
                while e < prec {
                    s.add_term(e, c.clone());
                    e += 2 * k;
                }
            }
            s
        })
        .collect();
    let mut t: Vec<QSeries> = vec![QSeries::one(prec)];
    for j in 1..=kmax {
        let mut acc = QSeries::zero(prec);
        for k in 1..=j {
            let term = log[k as usize].mul(&t[(j - k) as usize]);
            acc = acc.add(&term.scale(&BigRational::from_integer(BigInt::from(k))));
        }
        t.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(j))));
    }
    t.into_iter().enumerate().map(|(j, s)| (j as i64, s)).collect()
}

/// `(q;q)_∞` truncated.
fn q_pochhammer_inf(prec: i64) -> QSeries {
    let mut acc = QSeries::one(prec);
    let mut k = 1;
    while 2 * k < prec {
        let f = QSeries::one(prec).sub(&QSeries::monomial(2 * k, BigRational::one(), prec));
        acc = acc.mul(&f);
        k += 1;
    }
    acc
}

/// `ϑ(x) = (q;q)_∞ Θ₊(x) Θ₊(1/x)` coefficient-wise below `q^prec`.
pub fn check_triple_product(prec: u32) -> Report {
    let mut rep = Report::new("triple_product").param("prec", prec);
    let p2 = 2 * i64::from(prec);
    let th = theta_series(prec);
    let tp = theta_plus(p2);
    let tm: XSeries = tp.iter().map(|(&k, s)| (-k, s.clone())).collect();
    let poch: XSeries = [(0, q_pochhammer_inf(p2))].into_iter().collect();
    let rhs = xs_mul(&poch, &xs_mul(&tp, &tm, p2), p2);
    let keys: std::collections::BTreeSet<i64> = th.keys().chain(rhs.keys()).copied().collect();
    for n in keys {
        let l = th.get(&n).cloned().unwrap_or_else(|| QSeries::zero(p2));
        let r = rhs.get(&n).cloned().unwrap_or_else(|| QSeries::zero(p2));
        let lim = l.prec().min(r.prec());
        let diff = l.sub(&r);
        let bad = diff.terms().keys().find(|&&k| k < lim).copied();
        rep.check(bad.is_none(), || {
            format!("x^{n} q^({}/2): lhs = {l}, rhs = {r}", bad.unwrap())
        });
    }
    rep
}

// Finite alphabets -----------------------------------------------------------

/// Laurent polynomial in `x_1..x_N` with exact coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentN {
    pub n: usize,
    terms: BTreeMap<Vec<i32>, FieldElem>,
}

impl LaurentN {
    pub fn constant(n: usize, c: FieldElem) -> LaurentN {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; n], c);
        }
        LaurentN { n, terms }
    }

    pub fn one(n: usize) -> LaurentN {
        LaurentN::constant(n, FieldElem::one())
    }

    pub fn monomial(exps: Vec<i32>, c: FieldElem) -> LaurentN {
        let n = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentN { n, terms }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, FieldElem> {
        &self.terms
    }

    fn add_term(&mut self, e: Vec<i32>, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = x.add(c);
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn add(&self, o: &LaurentN) -> LaurentN {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn mul(&self, o: &LaurentN) -> LaurentN {
        let mut out = LaurentN::constant(self.n, FieldElem::zero());
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, &x.mul(y));
            }
        }
        out
    }

    /// `[·]_1`.
    pub fn constant_term(&self) -> FieldElem {
        self.terms.get(&vec![0; self.n]).cloned().unwrap_or_else(FieldElem::zero)
    }

    /// `x_i ↦ 1/x_i`.
    pub fn invert_vars(&self) -> LaurentN {
        LaurentN {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }
}

/// `Δ = Π_{i≠j} Π_{s<k} (1 - q^s x_i/x_j)`, the telescoped density at `t = q^k`.
pub fn density_delta(n: usize, k: u32) -> LaurentN {
    let mut acc = LaurentN::one(n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for s in 0..k {
                let mut e = vec![0; n];
                e[i] += 1;
                e[j] -= 1;
                let f = LaurentN::one(n).add(&LaurentN::monomial(e, FieldElem::q().pow(i64::from(s)).neg()));
                acc = acc.mul(&f);
            }
        }
    }
    acc
}

/// `f(x_1, …, x_N)` with coefficients specialized at `t = q^k`.
pub fn restrict_to_n(f: &SymFunc, n: usize, k: u32) -> Result<LaurentN> {
    let mut powers: BTreeMap<u32, LaurentN> = BTreeMap::new();
    let mut out = LaurentN::constant(n, FieldElem::zero());
    for (mu, c) in f.terms() {
        let c = c.specialize_v(i64::from(k))?;
        let mut t = LaurentN::constant(n, c);
        for &r in mu.parts() {
            let pr = powers.entry(r).or_insert_with(|| {
                let mut s = LaurentN::constant(n, FieldElem::zero());
                for i in 0..n {
                    let mut e = vec![0; n];
                    e[i] = r as i32;
                    s.add_term(e, &FieldElem::one());
                }
                s
            });
            t = t.mul(pr);
        }
        out = out.add(&t);
    }
    Ok(out)
}

fn q_poch(x: &FieldElem, n: u32) -> FieldElem {
    (0..n)
        .map(|s| FieldElem::one().sub(&x.mul(&FieldElem::q().pow(i64::from(s)))))
        .product()
}

fn sum_sq(mu: &Partition) -> i64 {
    mu.parts().iter().map(|&x| i64::from(x) * i64::from(x)).sum()
}

/// Both sides of Cherednik's identity at `t = q^k` in `N` variables, exact.
pub fn cherednik_sides(mu: &Partition, nu: &Partition, n: usize, k: u32) -> Result<(FieldElem, FieldElem)> {
    if mu.len() > n || nu.len() > n {
        return Err(Error::Domain(format!("{mu} or {nu} has more than {n} parts")));
    }
    let pm = restrict_to_n(&macdonald_p(mu), n, k)?;
    let pn = restrict_to_n(&macdonald_p(nu), n, k)?.invert_vars();
    let prod = pm.mul(&pn).mul(&density_delta(n, k));
    // Θ(x) = Π ϑ(x_i) pairs x^a with q^{|a|²/2} in the constant term.
    let mut lhs = FieldElem::zero();
    for (a, c) in prod.terms() {
        let s: i64 = a.iter().map(|&x| i64::from(x) * i64::from(x)).sum();
        lhs = lhs.add(&c.mul(&FieldElem::half_qt(s, 0)));
    }
    let nfact: i64 = (1..=n as i64).product();
    let lhs = lhs.div(&FieldElem::from_int(nfact));

    let kk = i64::from(k);
    let mus: Vec<i64> = (1..=n).map(|i| i64::from(mu.part(i))).collect();
    let point: Vec<FieldElem> = (0..n)
        .map(|i| FieldElem::half_qt(-2 * mus[i] + 2 * kk * i as i64, 0))
        .collect();
    let pn_at = restrict_to_n(&macdonald_p(nu), n, k)?;
    let mut val = FieldElem::zero();
    for (e, c) in pn_at.terms() {
        let mut t = c.clone();
        for (x, &p) in point.iter().zip(e) {
            t = t.mul(&x.pow(i64::from(p)));
        }
        val = val.add(&t);
    }
    let mut rhs = FieldElem::half_qt(sum_sq(mu) + sum_sq(nu) - 2 * kk * nu.n() as i64, 0).mul(&val);
    for i in 0..n {
        for j in i + 1..n {
            let x = FieldElem::half_qt(2 * (mus[i] - mus[j]) + 2 * kk * (j - i) as i64, 0);
            rhs = rhs.mul(&q_poch(&x, k));
        }
    }
    Ok((lhs, rhs))
}

/// Compares two exact values through their `q`-expansions below `q^prec`.
/// Returns the first differing doubled exponent, if any, and whether any
/// coefficient was actually compared.
fn compare_below(l: &FieldElem, r: &FieldElem, prec: u32) -> Result<(Option<i64>, bool)> {
    let p2 = 2 * i64::from(prec);
    let ls = QSeries::from_field(l, p2)?;
    let rs = QSeries::from_field(r, p2)?;
    let d = ls.sub(&rs);
    let informative = !ls.is_zero() || !rs.is_zero();
    Ok((d.terms().keys().next().copied(), informative))
}

/// Cherednik's identity for `A_{N-1}` at `t = q^k`, compared below `q^prec`.
pub fn cherednik_check(mu: &Partition, nu: &Partition, n: usize, k: u32, prec: u32) -> Report {
    let mut rep = Report::new("cherednik")
        .param("mu", mu)
        .param("nu", nu)
        .param("N", n)
        .param("k", k)
        .param("prec", prec);
    if k == 0 || n == 0 {
        rep.inconclusive("N and k must be positive");
        return rep;
    }
    let (lhs, rhs) = match cherednik_sides(mu, nu, n, k) {
        Ok(x) => x,
        Err(e) => {
            rep.inconclusive(&e.to_string());
            return rep;
        }
    };
    rep.row("lhs", &lhs);
    rep.row("rhs", &rhs);
    match compare_below(&lhs, &rhs, prec) {
        Ok((first, informative)) => {
            let exact = lhs == rhs;
            match first {
                Some(h) => rep.check(false, || {
                    format!("q^({h}/2) coefficient differs: lhs = {lhs}, rhs = {rhs}")
                }),
                None if !exact => rep.check(false, || {
                    format!("agree below q^{prec} but differ: lhs = {lhs}, rhs = {rhs}")
                }),
                None => {
                    rep.check(true, String::new);
                    if !informative {
                        rep.inconclusive("both sides vanish below the precision window");
                    }
                }
            }
        }
        Err(e) => rep.inconclusive(&e.to_string()),
    }
    rep
}

/// `C_μ = Π_i 1/(t^{ℓ+1-i};q)_{μ_i} · Π_{i<j} (t^{j-i+1};q)_{μ_i-μ_j} / (t^{j-i};q)_{μ_i-μ_j}`,
/// the limit of the finite product on the right of Cherednik's identity.
pub fn finmac_factor(mu: &Partition) -> FieldElem {
    let poch = |a: i64, b: i64, n: u32| -> FieldElem {
        // (q^{a/2} t^{b/2}; q)_n
        (0..i64::from(n))
            .map(|s| FieldElem::one().sub(&FieldElem::half_qt(a + 2 * s, b)))
            .product()
    };
    let l = mu.len();
    let mut acc = FieldElem::one();
    for i in 1..=l {
        acc = acc.div(&poch(0, 2 * (l + 1 - i) as i64, mu.part(i)));
        for j in i + 1..=l {
            let d = mu.part(i) - mu.part(j);
            let g = (j - i) as i64;
            acc = acc.mul(&poch(0, 2 * (g + 1), d)).div(&poch(0, 2 * g, d));
        }
    }
    acc
}

/// `(ω Γ₋(q^{1/2}/(1-q)) Γ₊(q^{1/2}/(1-t)) ω P_μ, P_ν)_{q,t}`.
pub fn finmac_lhs(mu: &Partition, nu: &Partition) -> FieldElem {
    let u = FieldElem::u();
    let cp = u.div(&FieldElem::one().sub(&FieldElem::t()));
    let cm = u.div(&FieldElem::one().sub(&FieldElem::q()));
    let g = macdonald_p(mu).omega();
    let g = gamma_plus_with(|k| cp.adams(k), &g);
    let g = gamma_minus_with(|k| cm.adams(k), &g, nu.size()).omega();
    inner_qt(&g, &macdonald_p(nu))
}

/// `q^{(μ²+ν²)/2} t^{-n(ν)} P_ν(q^{-μ-ρ})`.
pub fn finmac_rhs(mu: &Partition, nu: &Partition) -> FieldElem {
    let pv = macdonald_p(nu).evaluate(&AlphabetPoint::principal_mu_rho(mu));
    FieldElem::half_qt(sum_sq(mu) + sum_sq(nu), -2 * nu.n() as i64).mul(&pv)
}

/// The infinite-`N` identity with the normalization factor `C_μ`.
pub fn finmac_check(mu: &Partition, nu: &Partition) -> Report {
    let mut rep = Report::new("finmac").param("mu", mu).param("nu", nu);
    let lhs = finmac_lhs(mu, nu);
    let bare = finmac_rhs(mu, nu);
    let rhs = bare.mul(&finmac_factor(mu));
    rep.check(lhs == rhs, || format!("lhs = {lhs}, rhs = {rhs}"));
    if lhs != bare {
        rep.note("the bare right side differs from the left; the factor C_mu is required");
    }
    rep
}

/// Finite-`N` ratios `LHS_N(μ,ν)/LHS_N(∅,∅)` at `t = q^k` against the
/// infinite-`N` left side of [`finmac_check`], compared below `q^prec`.
pub fn stabilization_check(mu: &Partition, nu: &Partition, n: usize, k: u32, prec: u32) -> Report {
    let mut rep = Report::new("stabilization")
        .param("mu", mu)
        .param("nu", nu)
        .param("N", n)
        .param("k", k)
        .param("prec", prec);
    let sides = cherednik_sides(mu, nu, n, k)
        .and_then(|(l, _)| Ok((l, cherednik_sides(&Partition::empty(), &Partition::empty(), n, k)?.0)));
    let (l, l0) = match sides {
        Ok(x) => x,
        Err(e) => {
            rep.inconclusive(&e.to_string());
            return rep;
        }
    };
    let finite = l.div(&l0);
    let infinite = match finmac_lhs(mu, nu).specialize_v(i64::from(k)) {
        Ok(x) => x,
        Err(e) => {
            rep.inconclusive(&e.to_string());
            return rep;
        }
    };
    match compare_below(&finite, &infinite, prec) {
        Ok((None, _)) => rep.check(true, String::new),
        Ok((Some(h), _)) => rep.check(false, || {
            format!("q^({h}/2) coefficient differs: finite = {finite}, limit = {infinite}")
        }),
        Err(e) => rep.inconclusive(&e.to_string()),
    }
    rep
}

/// Runs a family of reports into one.
pub fn combine(identity: &str, reports: &[Report]) -> Report {
    let mut out = Report::new(identity);
    for r in reports {
        if r.status == Status::Inconclusive {
            out.inconclusive(&format!("{}: {}", r.identity, r.notes.join("; ")));
        }
        out.absorb(r);
    }
    out
}

/// [`cherednik_check`] over every `N ∈ ns`, `k ∈ ks` and `|μ|, |ν| ≤ max_size`
/// with at most `N` parts.
pub fn cherednik_grid(ns: &[usize], ks: &[u32], max_size: u32, prec: u32) -> Report {
    let mut reps = Vec::new();
    for &n in ns {
        for &k in ks {
            for mu in partitions_up_to(max_size).iter().filter(|p| p.len() <= n) {
                for nu in partitions_up_to(max_size).iter().filter(|p| p.len() <= n) {
                    reps.push(cherednik_check(mu, nu, n, k, prec));
                }
            }
        }
    }
    combine("cherednik", &reps)
        .param("N", join(ns))
        .param("k", join(ks))
        .param("max_size", max_size)
        .param("prec", prec)
}

pub fn finmac_grid(max_size: u32) -> Report {
    let all = partitions_up_to(max_size);
    let reps: Vec<Report> = all
        .iter()
        .flat_map(|mu| all.iter().map(move |nu| finmac_check(mu, nu)))
        .collect();
    combine("finmac", &reps).param("max_size", max_size)
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::fe;
    use crate::partition::partition;

    #[test]
    fn theta_head() {
        let th = theta_series(5);
        assert_eq!(th[&0], QSeries::one(10));
        assert_eq!(th[&1], QSeries::monomial(1, BigRational::one(), 10));
        assert!(check_triple_product(6).passed());
    }

    #[test]
    fn series_expansion() {
        let s = QSeries::from_field(&fe("1/(1-q)"), 7).unwrap();
        assert_eq!(s.terms().keys().copied().collect::<Vec<_>>(), vec![0, 2, 4, 6]);
        let s = QSeries::from_field(&fe("q^(-1/2)/(2-q)"), 3).unwrap();
        assert_eq!(s.coeff(-1), BigRational::new(1.into(), 2.into()));
        assert_eq!(s.coeff(1), BigRational::new(1.into(), 4.into()));
        assert!(QSeries::from_field(&fe("t"), 4).is_err());
    }

    #[test]
    fn delta_small() {
        assert_eq!(density_delta(1, 3), LaurentN::one(1));
        let d = density_delta(2, 1);
        assert_eq!(d.constant_term(), FieldElem::from_int(2));
        assert_eq!(d.terms().len(), 3);
    }

    #[test]
    fn one_variable() {
        for (a, b) in [(0u32, 0u32), (1, 0), (2, 1), (1, 3)] {
            let mu = if a == 0 { Partition::empty() } else { partition(&[a]) };
            let nu = if b == 0 { Partition::empty() } else { partition(&[b]) };
            let (l, r) = cherednik_sides(&mu, &nu, 1, 1).unwrap();
            let d = i64::from(a) - i64::from(b);
            assert_eq!(l, FieldElem::half_qt(d * d, 0));
            assert_eq!(l, r);
        }
    }

    #[test]
    fn small_checks() {
        assert!(cherednik_check(&partition(&[1]), &partition(&[1]), 2, 1, 10).passed());
        assert!(finmac_check(&Partition::empty(), &partition(&[1])).passed());
        assert_eq!(
            finmac_rhs(&Partition::empty(), &partition(&[1])),
            fe("q^(1/2)/(1-t)")
        );
    }
}
