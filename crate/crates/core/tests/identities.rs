use qtfock::field::fe;
use qtfock::fock::{check_thm1, TruncOp};
use qtfock::localization::{
    ext_char, geometric_w_element, half_weight_product, resolution_char, tangent_char, Character,
};
use qtfock::macdonald::{fourier_pair, interpolation_hstar, macdonald_j, macdonald_p, modified_h, record};
use qtfock::mmc::{check_triple_product, stabilization_check};
use qtfock::symfunc::{basis_convert, herm, inner_prime, inner_qt, weight_herm, weight_prime, weight_qt, Basis};
use qtfock::zfun::{
    check_basis_independence, check_qt_symmetry, check_quiver, compare_zfun, QuiverSpec,
};
use qtfock::{partition, partitions_of, partitions_up_to, FieldElem, SymFunc};

#[test]
fn pairings_are_diagonal_in_power_sums() {
    let all = partitions_up_to(6);
    for la in &all {
        for mu in &all {
            let (a, b) = (SymFunc::p(la), SymFunc::p(mu));
            let (wq, wp, wh) = if la == mu {
                (weight_qt(la), weight_prime(la), weight_herm(la))
            } else {
                (FieldElem::zero(), FieldElem::zero(), FieldElem::zero())
            };
            assert_eq!(inner_qt(&a, &b), wq);
            assert_eq!(inner_prime(&a, &b), wp);
            assert_eq!(herm(&a, &b), wh);
        }
    }
}

#[test]
fn macdonald_p_orthogonal_and_j_integral() {
    for d in 0..=5 {
        let ps: Vec<_> = partitions_of(d).into_iter().map(|m| (macdonald_p(&m), m)).collect();
        for (i, (a, _)) in ps.iter().enumerate() {
            for (b, _) in &ps[i + 1..] {
                assert!(inner_qt(a, b).is_zero());
            }
        }
        for (_, mu) in &ps {
            for (la, c) in basis_convert(&macdonald_j(mu), Basis::Monomial) {
                assert!(c.is_polynomial(), "J{mu} at m{la}: {c}");
            }
        }
    }
}

#[test]
fn fourier_pairing_is_triangular() {
    for la in partitions_up_to(3) {
        let hs = interpolation_hstar(&la);
        for mu in partitions_up_to(3) {
            let v = fourier_pair(&hs, &mu);
            assert_eq!(v.is_zero(), !mu.contains(&la), "H*{la} against H{mu}: {v}");
        }
    }
}

#[test]
fn ext_duality_and_tangent_space() {
    let qt = Character::qt(1, 1, 1);
    for la in partitions_up_to(3) {
        for mu in partitions_up_to(3) {
            assert_eq!(ext_char(&mu, &la), ext_char(&la, &mu).conj().mul(&qt));
        }
    }
    for la in partitions_up_to(5) {
        let t = tangent_char(&la);
        assert_eq!(t.conj().mul(&qt), t);
        assert_eq!(half_weight_product(&t), record(&la).norm_herm);
    }
}

#[test]
fn resolution_characters() {
    for la in partitions_up_to(6) {
        let r = resolution_char(&la);
        assert!(r.terms().values().all(|c| (-1..=1).contains(c)), "{la}: {r}");
        assert_eq!(r.terms().values().sum::<i64>(), 1);
    }
}

#[test]
fn w_at_unit_mass() {
    // Diagonal entries are the norms; W(1) still raises degree.
    let one = FieldElem::one();
    for la in partitions_up_to(3) {
        let d = geometric_w_element(&la, &la).subst_m(&one).unwrap();
        let t = tangent_char(&la);
        let expected = qtfock::localization::lambda_genus(&t, &fe("q^(-1)*t^(-1)")).unwrap();
        assert_eq!(d, expected);
    }
    let w1 = TruncOp::w_operator(&one, 1);
    let h1 = modified_h(&partition(&[1]));
    let raised = w1.apply(&SymFunc::one()).unwrap();
    assert_eq!(herm(&h1, &raised), fe("1 - q^(-1)*t^(-1)"));
}

#[test]
fn triple_product_to_order_twenty() {
    assert!(check_triple_product(20).passed());
}

#[test]
fn cherednik_stabilizes_in_n() {
    // The finite-N ratio agrees with the N → ∞ form below q^{k(N-1)}.
    for mu in partitions_up_to(2) {
        for nu in partitions_up_to(2) {
            for (n, k) in [(3usize, 1u32), (4, 1), (3, 2)] {
                let window = k * (n as u32 - 1);
                let r = stabilization_check(&mu, &nu, n, k, window);
                assert!(r.passed(), "{}", r.to_text());
            }
        }
    }
}

#[test]
fn theorem_one_small_blocks() {
    assert!(check_thm1(1, 3).passed());
}

#[test]
fn partition_function_invariants() {
    assert!(check_basis_independence(4).unwrap().passed());
    assert!(check_qt_symmetry(4).passed());
    for masses in [vec![fe("m"), fe("2")], vec![fe("m"), fe("m*q")]] {
        let spec = QuiverSpec::new(masses).unwrap();
        let r = check_quiver(&spec, 3).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
    let single = QuiverSpec::new(vec![fe("m")]).unwrap();
    assert!(check_quiver(&single, 3).unwrap().passed());
}

#[test]
fn mass_redefinition_is_not_needed() {
    assert!(compare_zfun(3, false).unwrap().passed());
    let shifted = compare_zfun(1, true).unwrap();
    assert!(!shifted.passed());
    assert!(shifted.first_discrepancy.unwrap().contains("q0^1"));
}
