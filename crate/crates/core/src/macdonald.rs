//! Macdonald polynomials `P_μ`, integral forms `J_μ`, modified polynomials
//! `H_μ`, the diagonal operator `T`, interpolation polynomials `H*_μ` and the
//! Fourier pairing.
//!
//! Everything is computed per degree and memoized. An optional on-disk cache
//! (one JSON file per degree) is consulted first; it is advisory and any
//! mismatch in its header triggers recomputation.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::field::FieldElem;
use crate::localization::ideal_point;
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::report::Report;
use crate::symfunc::{basis_element, herm, inner_qt, Basis, SymFunc};

pub const CACHE_ENV: &str = "QTFOCK_CACHE_DIR";
const CACHE_FORMAT: &str = "qtfock-macdonald-cache";
const CACHE_SCHEMA: u32 = 1;
const MONOMIAL_ORDER: &str = "grlex(u,v,m)";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MacdonaldRecord {
    pub mu: Partition,
    #[serde(rename = "P")]
    pub p: SymFunc,
    #[serde(rename = "J")]
    pub j: SymFunc,
    #[serde(rename = "H")]
    pub h: SymFunc,
    pub norm_qt: FieldElem,
    pub norm_herm: FieldElem,
}

#[derive(Debug)]
pub struct DegreeTable {
    pub degree: u32,
    pub records: Vec<MacdonaldRecord>,
    index: HashMap<Partition, usize>,
}

impl DegreeTable {
    fn new(degree: u32, records: Vec<MacdonaldRecord>) -> DegreeTable {
        let index = records
            .iter()
            .enumerate()
            .map(|(i, r)| (r.mu.clone(), i))
            .collect();
        DegreeTable {
            degree,
            records,
            index,
        }
    }

    pub fn get(&self, mu: &Partition) -> &MacdonaldRecord {
        &self.records[self.index[mu]]
    }
}

#[derive(Serialize, Deserialize)]
struct CacheHeader {
    format: String,
    version: String,
    schema: u32,
    monomial_order: String,
    degree: u32,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    header: CacheHeader,
    records: Vec<MacdonaldRecord>,
}

static CACHE_DIR_OVERRIDE: RwLock<Option<Option<PathBuf>>> = RwLock::new(None);

/// Overrides the cache directory for this process. `None` disables the disk
/// cache; without an override the `QTFOCK_CACHE_DIR` variable is used.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR_OVERRIDE.write().unwrap() = Some(dir);
}

pub fn cache_dir() -> Option<PathBuf> {
    if let Some(o) = CACHE_DIR_OVERRIDE.read().unwrap().clone() {
        return o;
    }
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}

fn cache_path(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("macdonald-deg{n}.json"))
}

fn load_cached(dir: &Path, n: u32) -> Option<Vec<MacdonaldRecord>> {
    let text = std::fs::read_to_string(cache_path(dir, n)).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    let h = &file.header;
    if h.format != CACHE_FORMAT
        || h.version != env!("CARGO_PKG_VERSION")
        || h.schema != CACHE_SCHEMA
        || h.monomial_order != MONOMIAL_ORDER
        || h.degree != n
    {
        return None;
    }
    let expect = partitions_of(n);
    if file.records.len() != expect.len()
        || file.records.iter().zip(&expect).any(|(r, m)| &r.mu != m)
    {
        return None;
    }
    Some(file.records)
}

/// Writes through a temporary file and renames, so concurrent writers of the
/// same content never leave a torn file behind.
fn store_cached(dir: &Path, n: u32, records: &[MacdonaldRecord]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let file = CacheFile {
        header: CacheHeader {
            format: CACHE_FORMAT.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            schema: CACHE_SCHEMA,
            monomial_order: MONOMIAL_ORDER.into(),
            degree: n,
        },
        records: records.to_vec(),
    };
    let text = serde_json::to_string_pretty(&file).map_err(std::io::Error::other)?;
    let tmp = dir.join(format!(
        ".macdonald-deg{n}.{}.{:?}.tmp",
        std::process::id(),
        std::thread::current().id()
    ));
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, cache_path(dir, n))
}

/// `Π_{□∈μ} (1 - q^{a(□)} t^{l(□)+1})`.
pub fn integral_form_factor(mu: &Partition) -> FieldElem {
    mu.cells()
        .map(|(i, j)| {
            let a = i64::from(mu.arm(i, j).unwrap());
            let l = i64::from(mu.leg(i, j).unwrap());
            FieldElem::one().sub(&FieldElem::half_qt(2 * a, 2 * (l + 1)))
        })
        .product()
}

/// Computes all records of degree `n` from scratch.
pub fn compute_degree(n: u32) -> Vec<MacdonaldRecord> {
    let parts = partitions_of(n);
    let count = parts.len();
    let ms: Vec<SymFunc> = parts
        .iter()
        .map(|m| basis_element(m, Basis::Monomial))
        .collect();
    // Gram–Schmidt from the bottom of the reverse-lexicographic order up.
    let mut ps: Vec<SymFunc> = vec![SymFunc::zero(); count];
    let mut norms: Vec<FieldElem> = vec![FieldElem::zero(); count];
    for i in (0..count).rev() {
        let mut f = ms[i].clone();
        for j in i + 1..count {
            let c = inner_qt(&ms[i], &ps[j]).div(&norms[j]);
            if !c.is_zero() {
                f = f.sub(&ps[j].scale(&c));
            }
        }
        norms[i] = inner_qt(&f, &f);
        ps[i] = f;
    }
    parts
        .into_iter()
        .zip(ps.into_iter().zip(norms))
        .map(|(mu, (p, norm_qt))| {
            let j = p.scale(&integral_form_factor(&mu));
            let tn = FieldElem::half_qt(0, 2 * mu.n() as i64);
            let h = j
                .map_coeffs(|c| c.invert_uv(false, true))
                .upsilon(false)
                .scale(&tn);
            let norm_herm = herm(&h, &h);
            MacdonaldRecord {
                mu,
                p,
                j,
                h,
                norm_qt,
                norm_herm,
            }
        })
        .collect()
}

fn memo() -> &'static RwLock<HashMap<u32, Arc<DegreeTable>>> {
    static MEMO: OnceLock<RwLock<HashMap<u32, Arc<DegreeTable>>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// All records of degree `n`, from memory, disk cache or computation.
pub fn degree_table(n: u32) -> Arc<DegreeTable> {
    if let Some(t) = memo().read().unwrap().get(&n) {
        return t.clone();
    }
    let dir = cache_dir();
    let records = dir
        .as_deref()
        .and_then(|d| load_cached(d, n))
        .unwrap_or_else(|| {
            let r = compute_degree(n);
            if let Some(d) = dir.as_deref() {
                // The cache is advisory; a failed write only costs time later.
                let _ = store_cached(d, n, &r);
            }
            r
        });
    let table = Arc::new(DegreeTable::new(n, records));
    memo()
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| table.clone())
        .clone()
}

pub fn record(mu: &Partition) -> MacdonaldRecord {
    degree_table(mu.size()).get(mu).clone()
}

pub fn macdonald_p(mu: &Partition) -> SymFunc {
    degree_table(mu.size()).get(mu).p.clone()
}

pub fn macdonald_j(mu: &Partition) -> SymFunc {
    degree_table(mu.size()).get(mu).j.clone()
}

pub fn modified_h(mu: &Partition) -> SymFunc {
    degree_table(mu.size()).get(mu).h.clone()
}

/// `Π_w (w^{1/2} - w^{-1/2})` over `{q^{a+1} t^{-l}, q^{-a} t^{l+1}}`: the
/// arm/leg formula for `⟨H_μ, H_μ⟩`.
pub fn norm_formula(mu: &Partition) -> FieldElem {
    let mut acc = FieldElem::one();
    for (i, j) in mu.cells() {
        let a = i64::from(mu.arm(i, j).unwrap());
        let l = i64::from(mu.leg(i, j).unwrap());
        for (x, y) in [(a + 1, -l), (-a, l + 1)] {
            acc = acc.mul(&FieldElem::half_qt(x, y).sub(&FieldElem::half_qt(-x, -y)));
        }
    }
    acc
}

/// Coefficients `c_λ` with `f = Σ c_λ H_λ`.
pub fn to_h_basis(f: &SymFunc) -> BTreeMap<Partition, FieldElem> {
    let mut out = BTreeMap::new();
    let Some(top) = f.max_degree() else {
        return out;
    };
    for d in 0..=top {
        let part = f.degree_part(d);
        if part.is_zero() {
            continue;
        }
        let table = degree_table(d);
        for r in &table.records {
            let c = herm(&r.h, &part).div(&r.norm_herm);
            if !c.is_zero() {
                out.insert(r.mu.clone(), c);
            }
        }
    }
    out
}

pub fn from_h_basis(c: &BTreeMap<Partition, FieldElem>) -> SymFunc {
    c.iter()
        .fold(SymFunc::zero(), |acc, (mu, x)| acc.add(&modified_h(mu).scale(x)))
}

/// `q^{n(λ')} t^{n(λ)}`.
pub fn t_eigenvalue(la: &Partition) -> FieldElem {
    FieldElem::half_qt(2 * la.conjugate().n() as i64, 2 * la.n() as i64)
}

/// `T^power f`, with `T H_λ = q^{n(λ')} t^{n(λ)} H_λ`.
pub fn t_operator(f: &SymFunc, power: i64) -> SymFunc {
    if power == 0 {
        return f.clone();
    }
    let c = to_h_basis(f);
    c.iter().fold(SymFunc::zero(), |acc, (mu, x)| {
        let e = t_eigenvalue(mu).pow(power);
        acc.add(&modified_h(mu).scale(&x.mul(&e)))
    })
}

/// `H*_μ = T⁻¹ exp(Σ_{n>0} (-1)^{n+1} ∂/∂p_n) T H_μ`. The exponential of the
/// commuting derivations is the shift `p_n ↦ p_n + (-1)^{n+1}`.
pub fn interpolation_hstar(mu: &Partition) -> SymFunc {
    let th = modified_h(mu).scale(&t_eigenvalue(mu));
    let shifted = th.translate(|n| FieldElem::from_int(if n % 2 == 1 { 1 } else { -1 }));
    t_operator(&shifted, -1)
}

/// `H*_μ(⊖x_λ)`.
pub fn hstar_value(mu: &Partition, la: &Partition) -> FieldElem {
    interpolation_hstar(mu).evaluate(&ideal_point(la).negated())
}

/// Whether `H*_μ` vanishes at `⊖x_λ`.
pub fn verify_vanishing(mu: &Partition, la: &Partition) -> bool {
    hstar_value(mu, la).is_zero()
}

/// `(f, H_μ)_F = f(⊖x_μ) · H_μ(⊖x_∅)`.
pub fn fourier_pair(f: &SymFunc, mu: &Partition) -> FieldElem {
    let fv = f.evaluate(&ideal_point(mu).negated());
    if fv.is_zero() {
        return fv;
    }
    fv.mul(&modified_h(mu).evaluate(&ideal_point(&Partition::empty()).negated()))
}

/// Bilinear extension of [`fourier_pair`] in the second slot through the
/// `H` expansion of `g`.
pub fn fourier_pair_general(f: &SymFunc, g: &SymFunc) -> FieldElem {
    to_h_basis(g)
        .iter()
        .map(|(mu, c)| c.mul(&fourier_pair(f, mu)))
        .sum()
}

/// `⟨H_λ, H_μ⟩ = δ_{λμ} · norm_formula(λ)` for all `|λ|, |μ| ≤ max`.
pub fn check_hm2(max: u32) -> Report {
    let mut rep = Report::new("hm2").param("max_degree", max);
    for d in 0..=max {
        let hs: Vec<(Partition, SymFunc)> = partitions_of(d)
            .into_iter()
            .map(|mu| {
                let h = modified_h(&mu);
                (mu, h)
            })
            .collect();
        for (la, hl) in &hs {
            for (mu, hm) in &hs {
                let got = herm(hl, hm);
                let want = if la == mu { norm_formula(la) } else { FieldElem::zero() };
                rep.check(got == want, || {
                    format!("<H_{la}, H_{mu}>: computed = {got}, formula = {want}")
                });
            }
        }
    }
    rep
}

/// Vanishing, non-vanishing on the diagonal and top-degree term of `H*_μ`
/// for all `|μ|, |λ| ≤ max`.
pub fn check_interpolation(max: u32) -> Report {
    let mut rep = Report::new("interp").param("max_degree", max);
    let all = partitions_up_to(max);
    for mu in &all {
        let hs = interpolation_hstar(mu);
        let top = hs.degree_part(mu.size());
        let h = modified_h(mu);
        rep.check(top == h && hs.max_degree().unwrap_or(0) == mu.size(), || {
            format!("top degree of H*_{mu}: {top}, expected {h}")
        });
        for la in &all {
            let v = hs.evaluate(&ideal_point(la).negated());
            if la.contains(mu) {
                if la == mu {
                    rep.check(!v.is_zero(), || format!("H*_{mu} vanishes at its own point"));
                }
            } else {
                rep.check(v.is_zero(), || format!("H*_{mu} at the point of {la}: {v}"));
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
    use crate::symfunc::basis_convert;

    #[test]
    fn degree_two() {
        let p11 = macdonald_p(&partition(&[1, 1]));
        assert_eq!(p11, basis_element(&partition(&[1, 1]), Basis::Monomial));
        let p2 = macdonald_p(&partition(&[2]));
        let m = basis_convert(&p2, Basis::Monomial);
        assert_eq!(m[&partition(&[2])], FieldElem::one());
        assert_eq!(m[&partition(&[1, 1])], fe("(1+q)*(1-t)/(1-q*t)"));
    }

    #[test]
    fn small_h() {
        assert_eq!(modified_h(&Partition::empty()), SymFunc::one());
        assert_eq!(modified_h(&partition(&[1])), SymFunc::pk(1));
        assert_eq!(record(&partition(&[1])).norm_herm, fe("(q^(1/2)-q^(-1/2))*(t^(1/2)-t^(-1/2))"));
    }

    #[test]
    fn t_eigenvalues() {
        let h2 = modified_h(&partition(&[2]));
        assert_eq!(t_operator(&h2, 1), h2.scale(&FieldElem::q()));
        let h11 = modified_h(&partition(&[1, 1]));
        assert_eq!(t_operator(&h11, 1), h11.scale(&FieldElem::t()));
        assert_eq!(t_operator(&t_operator(&h11, 1), -1), h11);
    }

    #[test]
    fn hstar_small() {
        assert_eq!(interpolation_hstar(&Partition::empty()), SymFunc::one());
        let h1 = interpolation_hstar(&partition(&[1]));
        assert_eq!(h1, SymFunc::pk(1).add(&SymFunc::one()));
        assert!(verify_vanishing(&partition(&[1]), &Partition::empty()));
        assert!(!verify_vanishing(&partition(&[1]), &partition(&[1])));
        assert!(verify_vanishing(&partition(&[2]), &partition(&[1, 1])));
    }
}
