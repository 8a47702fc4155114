use exact_core::{frac, int, GradedOperator, Scalar, SparseMatrix};
use lattice_models::*;
use num_traits::One;
use partition_space::{Basis, Occupation, Partition, PartitionConstraint};
use proptest::prelude::*;
use vertex_operators::{build_gamma, Family, Sign};

fn entry(op: &GradedOperator, row: usize, col: usize) -> Vec<Scalar> {
    (0..=op.max_degree()).map(|d| op.get(d, row, col)).collect()
}

fn poly(coeffs: &[Scalar], len: usize) -> Vec<Scalar> {
    let mut out = coeffs.to_vec();
    out.resize(len, Scalar::from_integer(0.into()));
    out
}

#[test]
fn printed_two_site_transfer_matrix() {
    let (t, x) = (frac(2, 7), frac(5, 3));
    let lam = periodic_transfer(2, 2, &x, &t).unwrap();
    let states: Vec<Occupation> = ["(2,0)", "(1,1)", "(0,2)"].iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(lam.basis.states(), &states[..]);
    let one = Scalar::one();
    let zero = int(0);
    let diag = poly(&[one.clone(), zero.clone(), x.clone()], 3);
    let expect = [
        [diag.clone(), poly(&[zero.clone(), &one - &t], 3), poly(&[], 3)],
        [poly(&[zero.clone(), (&one - &t * &t) * &x], 3), diag.clone(), poly(&[zero.clone(), &one - &t * &t], 3)],
        [poly(&[], 3), poly(&[zero.clone(), (&one - &t) * &x], 3), diag],
    ];
    for (r, row) in expect.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            assert_eq!(&entry(&lam.op, r, c), e, "entry ({r}, {c})");
        }
    }
}

#[test]
fn three_periodic_constructions_agree() {
    let (t, x) = (frac(1, 3), int(2));
    for sites in 1..=4 {
        for n in 0..=4 {
            let pi = periodic_transfer(sites, n, &x, &t).unwrap().op;
            let trace = trace_transfer(&LocalWeights::QBoson, sites, n, &x, &t).unwrap().op;
            let toda = toda_trace_transfer(sites, n, &x, &t).unwrap().op;
            let spin = trace_transfer(&LocalWeights::SpinS(int(0)), sites, n, &x, &t).unwrap().op;
            assert_eq!(pi.first_mismatch(&trace), None, "trace N={sites} n={n}");
            assert_eq!(pi.first_mismatch(&toda), None, "toda N={sites} n={n}");
            assert_eq!(pi.first_mismatch(&spin), None, "spin N={sites} n={n}");
        }
    }
}

#[test]
fn hamiltonian_is_linear_coefficient() {
    let (t, x) = (frac(3, 5), frac(-2, 3));
    for sites in 2..=4 {
        for n in 0..=3 {
            let lam = periodic_transfer(sites, n, &x, &t).unwrap();
            let h = hamiltonian(sites, n, &x, &t).unwrap();
            assert_eq!(lam.op.block_or_zero(1), h, "N={sites} n={n}");
        }
    }
}

#[test]
fn translation_and_commuting_family() {
    let (t, x) = (frac(2, 5), int(3));
    for sites in 1..=4 {
        for n in 0..=4 {
            let lam = periodic_transfer(sites, n, &x, &t).unwrap();
            let shift = translation(sites, n, &x).unwrap().op.block_or_zero(0);
            assert!(commutes_with(&lam.op, &shift).unwrap().passed, "N={sites} n={n}");
            assert!(translation_power_check(sites, n, &x).unwrap().passed);
            assert!(commuting_blocks_check(&lam.op).unwrap().passed);
        }
    }
}

#[test]
fn spin_transfer_commutes() {
    let (t, x, s) = (frac(1, 3), frac(3, 2), frac(2, 5));
    for sites in 2..=3 {
        for n in 0..=3 {
            let lam = trace_transfer(&LocalWeights::SpinS(s.clone()), sites, n, &x, &t).unwrap();
            assert!(commuting_blocks_check(&lam.op).unwrap().passed);
            let shift = translation(sites, n, &x).unwrap().op.block_or_zero(0);
            assert!(commutes_with(&lam.op, &shift).unwrap().passed);
        }
    }
}

#[test]
fn hermitian_structure() {
    for sites in 1..=3 {
        for n in 0..=3 {
            let out = hermiticity_check(sites, n, &frac(7, 4), &frac(1, 3)).unwrap();
            assert!(out.passed, "{}", out.detail);
        }
    }
}

#[test]
fn empty_sector() {
    let lam = periodic_transfer(3, 0, &int(5), &frac(1, 2)).unwrap();
    assert_eq!(lam.op.block_or_zero(0), SparseMatrix::identity(1));
    assert_eq!(lam.op.get(3, 0, 0), int(5));
    assert_eq!(lam.op.nnz(), 2);
}

fn restricted(sites: usize, cap: usize) -> Basis<Partition> {
    Basis::partitions(PartitionConstraint { max_weight: cap, max_part: Some(sites), max_length: None })
}

#[test]
fn open_chain_matches_vertex_operators() {
    let t = frac(2, 5);
    for sites in 1..=3 {
        let basis = restricted(sites, 7);
        let gamma_minus = build_gamma(Family::L, Sign::Minus, &basis, &t).unwrap().op;
        let gamma_plus = build_gamma(Family::L, Sign::Plus, &basis, &t).unwrap().op;
        let a = open_boson_transfer(sites, &basis, &t).unwrap();
        let a_toda = open_toda_transfer(OpenKind::A, sites, &basis, &t).unwrap();
        let a_bar = open_toda_transfer(OpenKind::ABar, sites, &basis, &t).unwrap();
        assert_eq!(a.first_mismatch(&gamma_minus), None, "A_N, N = {sites}");
        assert_eq!(a_toda.first_mismatch(&gamma_minus), None);
        assert_eq!(a_bar.first_mismatch(&gamma_plus), None, "Abar_N, N = {sites}");
    }
}

#[test]
fn open_chain_degree_zero() {
    let basis = restricted(2, 4);
    let a = open_boson_transfer(2, &basis, &frac(1, 2)).unwrap();
    assert_eq!(a.block_or_zero(0), SparseMatrix::identity(basis.len()));
}

#[test]
fn gauge_equivalence() {
    for sites in 1..=3 {
        let out = toda_gauge_check(sites, 2, &frac(1, 3), 1).unwrap();
        assert!(out.passed, "{}", out.detail);
    }
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=7).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rll_random(u in rational(), v in rational(), t in rational(), cap in 4usize..=6) {
        prop_assert!(rll_check(&u, &v, &t, cap).unwrap().passed);
    }

    #[test]
    fn gauge_random(n in 1i64..=6, d in 2i64..=7, particles in 0usize..=3) {
        let out = toda_gauge_check(2, particles, &frac(n, d), 1).unwrap();
        prop_assert!(out.passed, "{}", out.detail);
    }

    #[test]
    fn constructions_agree_random(n in 1i64..=6, d in 2i64..=7, x in rational(), particles in 0usize..=3) {
        prop_assume!(x != int(0));
        let t = frac(n, d);
        let pi = periodic_transfer(3, particles, &x, &t).unwrap().op;
        let toda = toda_trace_transfer(3, particles, &x, &t).unwrap().op;
        prop_assert_eq!(pi.first_mismatch(&toda), None);
    }
}
