use exact_core::{frac, int, pow, tfactorial, Scalar};
use hall_littlewood::{hl_pq, Alphabet, HlFamily};
use partition_space::{partitions_of, Basis, Partition};
use proptest::prelude::*;
use vertex_operators::*;

fn t() -> Scalar {
    frac(3, 7)
}

#[test]
fn exchange_relations_all_families() {
    let basis = Basis::weight_capped(8);
    for (a1, a2) in [(Family::L, Family::L), (Family::L, Family::R), (Family::R, Family::L), (Family::R, Family::R)] {
        let outcome = gamma_commutation_check(a1, a2, &t(), &basis, 4).unwrap();
        assert!(outcome.passed, "{}", outcome.detail);
    }
}

#[test]
fn exchange_factor_at_t_zero_is_geometric() {
    for k in 0..6 {
        assert_eq!(commutation_factor(Family::L, Family::L, k, &int(0)), int(1));
    }
}

#[test]
fn window_too_small_is_rejected() {
    let basis = Basis::weight_capped(3);
    assert!(matches!(
        gamma_commutation_check(Family::L, Family::L, &t(), &basis, 4),
        Err(VertexError::WindowTooSmall { .. })
    ));
}

#[test]
fn eigenvectors() {
    let basis = Basis::weight_capped(8);
    let v = Alphabet::direct(vec![frac(1, 3), frac(-2, 7), frac(3, 4)]);
    let cases = [(Family::L, StateKind::L), (Family::L, StateKind::R), (Family::R, StateKind::L)];
    for (family, kind) in cases {
        let op = build_gamma(family, Sign::Plus, &basis, &t()).unwrap();
        let state = build_eigenstate(kind, &v, &basis, &t()).unwrap();
        let eigen = eigenvalue_series(family, kind, &v, &t(), 4).unwrap();
        let outcome = gamma_eigen_check(&op, &state, &eigen, 4).unwrap();
        assert!(outcome.passed, "{family:?} on {kind:?}: {}", outcome.detail);
    }
}

#[test]
fn r_plus_does_not_diagonalize_dual_states() {
    let basis = Basis::weight_capped(6);
    let v = Alphabet::direct(vec![frac(1, 3), frac(-2, 7)]);
    assert!(eigenvalue_series(Family::R, StateKind::R, &v, &t(), 3).is_err());
    let op = build_gamma(Family::R, Sign::Plus, &basis, &t()).unwrap();
    let state = build_eigenstate(StateKind::R, &v, &basis, &t()).unwrap();
    let e = eigenvalue_series(Family::R, StateKind::L, &v, &t(), 3).unwrap();
    assert!(!gamma_eigen_check(&op, &state, &e, 3).unwrap().passed);
}

#[test]
fn single_variable_states() {
    let basis = Basis::weight_capped(5);
    let x = frac(2, 5);
    let v = Alphabet::direct(vec![x.clone()]);
    let dual = build_eigenstate(StateKind::R, &v, &basis, &t()).unwrap();
    let direct = build_eigenstate(StateKind::L, &v, &basis, &t()).unwrap();
    for k in 0..=5 {
        let column = Partition::new(vec![1; k]).unwrap();
        let row = Partition::new(vec![k]).unwrap();
        assert_eq!(dual[basis.index_of(&column).unwrap()], pow(&x, k as i64).unwrap() / tfactorial(k, &t()));
        assert_eq!(direct[basis.index_of(&row).unwrap()], pow(&x, k as i64).unwrap());
    }
}

#[test]
fn adjoint_pairs() {
    let basis = Basis::weight_capped(6);
    for family in [Family::L, Family::R] {
        assert!(gamma_adjoint_check(family, &basis, &t()).unwrap().passed);
    }
}

#[test]
fn pieri_as_covector_identity() {
    let basis = Basis::weight_capped(7);
    let u = Alphabet::reciprocal(vec![frac(1, 2), frac(-1, 3), frac(2, 5)]);
    assert!(pieri_covector_check(&u, &basis, &t(), 3).unwrap().passed);
}

#[test]
fn skew_decomposition_of_q() {
    let basis = Basis::weight_capped(4);
    let u = Alphabet::reciprocal(vec![frac(1, 2), frac(-1, 3)]);
    let w = Alphabet::reciprocal(vec![frac(2, 5), frac(3, 11)]);
    let both = u.union(&w);
    for d in 0..=4 {
        for lambda in partitions_of(d, None, None) {
            let whole = hl_pq(HlFamily::Q, &lambda, &both, &t()).unwrap();
            let mut split = int(0);
            for mu in basis.states() {
                let skew = skew_q_from_gamma(&lambda, mu, &u, &basis, &t()).unwrap();
                if skew != int(0) {
                    split += skew * hl_pq(HlFamily::Q, mu, &w, &t()).unwrap();
                }
            }
            assert_eq!(whole, split, "lambda = {lambda}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn exchange_relations_random_t(n in -10i64..=10, d in 2i64..=11) {
        let t = frac(n, d);
        prop_assume!(t != int(0) && t != int(1) && t != int(-1));
        let basis = Basis::weight_capped(6);
        for (a1, a2) in [(Family::L, Family::L), (Family::L, Family::R), (Family::R, Family::L), (Family::R, Family::R)] {
            prop_assert!(gamma_commutation_check(a1, a2, &t, &basis, 3).unwrap().passed);
        }
    }
}
