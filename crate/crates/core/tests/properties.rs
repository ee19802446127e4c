use proptest::prelude::*;

use qtfock::localization::{boson_point, ideal_point, lambda_genus, Character};
use qtfock::symfunc::{basis_convert, from_basis, herm, AlphabetPoint, Basis};
use qtfock::{FieldElem, Partition, SymFunc};

fn small_poly() -> impl Strategy<Value = FieldElem> {
    prop::collection::vec((-3i64..=3, -2i64..=2, -2i64..=2, 0i64..=2), 1..4).prop_map(|ts| {
        ts.into_iter()
            .map(|(c, a, b, e)| FieldElem::monomial(c, a, b, e))
            .sum()
    })
}

fn elem() -> impl Strategy<Value = FieldElem> {
    (small_poly(), small_poly()).prop_map(|(n, d)| {
        if d.is_zero() {
            n
        } else {
            n.div(&d)
        }
    })
}

fn part(max_parts: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(Partition::from_unsorted)
}

fn symfunc(max_deg: u32) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((part(3, 2), small_poly()), 0..4).prop_map(move |ts| {
        SymFunc::from_terms(ts.into_iter().filter(|(p, _)| p.size() <= max_deg))
    })
}

fn character() -> impl Strategy<Value = Character> {
    prop::collection::vec((1i64..=2, -2i64..=2, -2i64..=2), 0..4).prop_map(|ts| {
        ts.into_iter()
            .fold(Character::zero(), |acc, (c, i, j)| acc.add(&Character::qt(c, i, j)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert!(a.sub(&a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(a.div(&b).mul(&b), a.clone());
        }
    }

    #[test]
    fn involutions_and_adams(a in elem(), j in 1u32..=3, k in 1u32..=3) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.swap_qt().swap_qt(), a.clone());
        prop_assert_eq!(a.adams(1), a.clone());
        prop_assert_eq!(a.adams(j * k), a.adams(j).adams(k));
        prop_assert_eq!(a.to_string().parse::<FieldElem>().unwrap(), a);
    }

    #[test]
    fn partition_statistics(la in part(5, 6)) {
        let mut legs = 0u64;
        let mut arms = 0u64;
        let mut hooks = 0u64;
        for (i, j) in la.cells() {
            let a = u64::from(la.arm(i, j).unwrap());
            let l = u64::from(la.leg(i, j).unwrap());
            arms += a;
            legs += l;
            hooks += a + l + 1;
        }
        prop_assert_eq!(la.n(), legs);
        prop_assert_eq!(la.conjugate().n(), arms);
        prop_assert_eq!(hooks, la.n() + la.conjugate().n() + u64::from(la.size()));
        prop_assert_eq!(la.conjugate().conjugate(), la);
    }

    #[test]
    fn hermitian_symmetry(f in symfunc(4), g in symfunc(4)) {
        prop_assert_eq!(herm(&f, &g), herm(&g, &f).conj());
    }

    #[test]
    fn omega_and_upsilon(f in symfunc(6)) {
        prop_assert_eq!(f.omega().omega(), f.clone());
        prop_assert_eq!(f.upsilon(false).upsilon(true), f.clone());
    }

    #[test]
    fn evaluation_is_multiplicative(f in symfunc(3), g in symfunc(3), la in part(2, 2)) {
        let points = [
            ideal_point(&la),
            ideal_point(&la).negated(),
            boson_point(&la, &FieldElem::m()),
            AlphabetPoint::principal_mu_rho(&la),
            AlphabetPoint::rule(|k| FieldElem::from_int(i64::from(k) + 1)),
        ];
        for x in &points {
            prop_assert_eq!(f.mul(&g).evaluate(x), f.evaluate(x).mul(&g.evaluate(x)));
        }
    }

    #[test]
    fn basis_round_trip(f in symfunc(6)) {
        for b in [Basis::Power, Basis::Monomial, Basis::Schur] {
            prop_assert_eq!(from_basis(&basis_convert(&f, b), b), f.clone());
        }
    }

    #[test]
    fn genus_is_multiplicative(a in character(), b in character()) {
        let m = FieldElem::m();
        prop_assert!(lambda_genus(&a, &FieldElem::zero()).unwrap().is_one());
        prop_assert_eq!(
            lambda_genus(&a.add(&b), &m).unwrap(),
            lambda_genus(&a, &m).unwrap().mul(&lambda_genus(&b, &m).unwrap())
        );
    }
}
