//! Multivariate polynomial gcd over the integers.
//!
//! The main route is the heuristic evaluate-and-interpolate gcd: evaluate one
//! variable at a large integer, recurse, rebuild the candidate from its
//! balanced base-ξ digits and confirm by exact division. When the heuristic
//! gives up, a primitive pseudo-remainder sequence finishes the job.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::poly::{Poly, NVARS};

const HEU_TRIES: usize = 6;

/// Greatest common divisor, normalized to a positive leading coefficient.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone().normalize_sign();
    }
    if b.is_zero() {
        return a.clone().normalize_sign();
    }
    if a.is_one() || b.is_one() {
        return Poly::one();
    }
    let ma = a.mono_content();
    let mb = b.mono_content();
    let mg = ma.gcd(mb);
    let a1 = a.div_mono(ma);
    let b1 = b.div_mono(mb);
    let ca = a1.content();
    let cb = b1.content();
    let cg = ca.gcd(&cb);
    let a2 = a1.div_int_exact(&ca);
    let b2 = b1.div_int_exact(&cb);
    let h = primitive_gcd(&a2, &b2);
    h.mul_term(mg, &cg).normalize_sign()
}

/// Returns `(g, a/g, b/g)`.
pub fn gcd_cofactors(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let g = gcd(a, b);
    if g.is_zero() {
        return (g, Poly::zero(), Poly::zero());
    }
    let ca = a.div_exact(&g).expect("gcd divides its first argument");
    let cb = b.div_exact(&g).expect("gcd divides its second argument");
    (g, ca, cb)
}

/// Gcd of polynomials with trivial integer and monomial content.
fn primitive_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b || *a == b.neg() {
        return a.clone().normalize_sign();
    }
    let va = a.vars();
    let vb = b.vars();
    for x in 0..NVARS {
        if va[x] && !vb[x] {
            return gcd(&content_in(a, x), b);
        }
        if vb[x] && !va[x] {
            return gcd(a, &content_in(b, x));
        }
    }
    // A monomial divisor test catches the common case where one argument
    // divides the other.
    if a.len() <= b.len() {
        if b.div_exact(a).is_some() {
            return a.clone().normalize_sign();
        }
    } else if a.div_exact(b).is_some() {
        return b.clone().normalize_sign();
    }
    match heu_gcd(a, b) {
        Some((h, _, _)) => h.normalize_sign(),
        None => prs_gcd(a, b),
    }
}

/// Gcd of the coefficients of `p` viewed as a polynomial in variable `x`.
pub fn content_in(p: &Poly, x: usize) -> Poly {
    let mut g = Poly::zero();
    for (_, c) in p.coeffs_in(x) {
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let mut r = c.mod_floor(m);
    let half: BigInt = m >> 1u32;
    if r > half {
        r -= m;
    }
    r
}

/// Rebuilds a polynomial in `x` from its image at `x = xi`, reading off
/// balanced base-`xi` digits of every coefficient.
fn interpolate(h: &Poly, xi: &BigInt, x: usize) -> Poly {
    let mut digits = Vec::new();
    let mut h = h.clone();
    let mut k = 0u32;
    while !h.is_zero() {
        let g = Poly::from_terms(
            h.terms()
                .iter()
                .map(|(m, c)| (*m, symmetric_mod(c, xi))),
        );
        h = h.sub(&g).div_int_exact(xi);
        if !g.is_zero() {
            digits.push((k, g));
        }
        k += 1;
    }
    Poly::from_coeffs_in(x, &digits)
}

fn primitive(p: Poly) -> Poly {
    let c = p.content();
    if c.is_zero() {
        return p;
    }
    p.div_int_exact(&c)
}

fn heu_gcd(f: &Poly, g: &Poly) -> Option<(Poly, Poly, Poly)> {
    if f.is_zero() && g.is_zero() {
        return Some((Poly::zero(), Poly::zero(), Poly::zero()));
    }
    if f.is_zero() {
        let s = if g.lead_coeff().is_negative() { -1 } else { 1 };
        let s = BigInt::from(s);
        return Some((g.scale(&s), Poly::zero(), Poly::constant(s)));
    }
    if g.is_zero() {
        let s = if f.lead_coeff().is_negative() { -1 } else { 1 };
        let s = BigInt::from(s);
        return Some((f.scale(&s), Poly::constant(s), Poly::zero()));
    }
    let vf = f.vars();
    let vg = g.vars();
    let Some(x) = (0..NVARS).find(|&i| vf[i] || vg[i]) else {
        let a = f.as_constant().unwrap();
        let b = g.as_constant().unwrap();
        let h = a.gcd(&b);
        return Some((
            Poly::constant(h.clone()),
            Poly::constant(&a / &h),
            Poly::constant(&b / &h),
        ));
    };

    let c = f.content().gcd(&g.content());
    let f = f.div_int_exact(&c);
    let g = g.div_int_exact(&c);

    let fnorm = f.max_abs_coeff();
    let gnorm = g.max_abs_coeff();
    let b: BigInt = 2 * fnorm.clone().min(gnorm.clone()) + 29;
    let lf = f.lead_coeff().abs();
    let lg = g.lead_coeff().abs();
    let cand = 2 * (&fnorm / &lf).min(&gnorm / &lg) + 4;
    let mut xi = (b.clone()).min(99 * b.sqrt()).max(cand);

    for _ in 0..HEU_TRIES {
        let ff = f.eval_var(x, &xi);
        let gg = g.eval_var(x, &xi);
        if !ff.is_zero() && !gg.is_zero() {
            let (h, cff, cfg) = heu_gcd(&ff, &gg)?;

            let h = primitive(interpolate(&h, &xi, x));
            if let Some(cf) = f.div_exact(&h) {
                if let Some(cg) = g.div_exact(&h) {
                    return Some((h.scale(&c), cf, cg));
                }
            }

            let cff = interpolate(&cff, &xi, x);
            if !cff.is_zero() {
                if let Some(h) = f.div_exact(&cff) {
                    if let Some(cg) = g.div_exact(&h) {
                        return Some((h.scale(&c), cff, cg));
                    }
                }
            }

            let cfg = interpolate(&cfg, &xi, x);
            if !cfg.is_zero() {
                if let Some(h) = g.div_exact(&cfg) {
                    if let Some(cf) = f.div_exact(&h) {
                        return Some((h.scale(&c), cf, cfg));
                    }
                }
            }
        }
        let r = xi.sqrt().sqrt();
        xi = BigInt::from(73794) * &xi * r / BigInt::from(27011);
    }
    None
}

/// Dense coefficients in variable `x`, index = power.
fn dense_in(p: &Poly, x: usize) -> Vec<Poly> {
    let cs = p.coeffs_in(x);
    let deg = cs.last().map(|c| c.0).unwrap_or(0) as usize;
    let mut out = vec![Poly::zero(); deg + 1];
    for (k, c) in cs {
        out[k as usize] = c;
    }
    out
}

fn from_dense(d: &[Poly], x: usize) -> Poly {
    let cs: Vec<(u32, Poly)> = d
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k as u32, c.clone()))
        .collect();
    Poly::from_coeffs_in(x, &cs)
}

fn trim(d: &mut Vec<Poly>) {
    while d.len() > 1 && d.last().is_some_and(|c| c.is_zero()) {
        d.pop();
    }
}

fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&bc.mul(&lr));
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            r.push(Poly::zero());
        }
    }
    r
}

fn pp_dense(d: &[Poly]) -> Vec<Poly> {
    let mut g = Poly::zero();
    for c in d {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() || g.is_one() {
        return d.to_vec();
    }
    d.iter()
        .map(|c| c.div_exact(&g).expect("content divides"))
        .collect()
}

/// Primitive pseudo-remainder sequence; slow but always terminates.
fn prs_gcd(a: &Poly, b: &Poly) -> Poly {
    let va = a.vars();
    let vb = b.vars();
    let Some(x) = (0..NVARS).find(|&i| va[i] && vb[i]) else {
        return gcd(a, b);
    };
    let ca = content_in(a, x);
    let cb = content_in(b, x);
    let cg = gcd(&ca, &cb);
    let mut p = pp_dense(&dense_in(a, x));
    let mut q = pp_dense(&dense_in(b, x));
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    let result = loop {
        let r = pseudo_rem(&p, &q);
        if r.len() == 1 && r[0].is_zero() {
            break q;
        }
        if r.len() == 1 {
            break vec![Poly::one()];
        }
        p = q;
        q = pp_dense(&r);
    };
    let h = from_dense(&pp_dense(&result), x);
    h.mul(&cg).normalize_sign()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Mono;

    fn p(terms: &[([u32; 3], i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|(e, c)| (Mono::new(*e), BigInt::from(*c))))
    }

    #[test]
    fn recovers_planted_factor() {
        let f = p(&[([1, 0, 0], 3), ([0, 1, 1], -2), ([0, 0, 0], 5)]);
        let a = p(&[([2, 0, 0], 1), ([0, 1, 0], 7), ([0, 0, 0], -1)]);
        let b = p(&[([0, 0, 2], 4), ([1, 1, 0], 1), ([0, 0, 0], 1)]);
        let g = gcd(&f.mul(&a), &f.mul(&b));
        assert_eq!(g, f.normalize_sign());
    }

    #[test]
    fn prs_agrees_with_heuristic() {
        let f = p(&[([1, 0, 0], 1), ([0, 1, 0], -1)]);
        let a = p(&[([2, 0, 0], 1), ([0, 0, 1], 1)]);
        let b = p(&[([0, 2, 0], 2), ([1, 0, 0], 1), ([0, 0, 0], 3)]);
        let fa = f.mul(&a);
        let fb = f.mul(&b);
        assert_eq!(prs_gcd(&fa, &fb), heu_gcd(&fa, &fb).unwrap().0.normalize_sign());
    }

    #[test]
    fn coprime_gives_one() {
        let a = p(&[([1, 0, 0], 1), ([0, 0, 0], -1)]);
        let b = p(&[([1, 0, 0], 1), ([0, 0, 0], 1)]);
        assert!(gcd(&a, &b).is_one());
        assert_eq!(gcd(&a.scale(&BigInt::from(6)), &b.scale(&BigInt::from(4))), Poly::constant(BigInt::from(2)));
    }
}
