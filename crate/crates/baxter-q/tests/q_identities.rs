use baxter_q::*;
use exact_core::{frac, int, GradedOperator, Scalar};
use num_traits::{One, Zero};
use partition_space::Occupation;
use proptest::prelude::*;

fn coeffs(op: &GradedOperator, row: usize, col: usize, len: usize) -> Vec<Scalar> {
    (0..len).map(|d| op.get(d, row, col)).collect()
}

fn p(c: &[Scalar]) -> Vec<Scalar> {
    let mut v = c.to_vec();
    v.resize(3, Scalar::zero());
    v
}

#[test]
fn printed_two_site_q() {
    let (t, x) = (frac(2, 7), frac(5, 3));
    let q = build_qmatrix(2, 2, &x, &t).unwrap();
    let states: Vec<Occupation> = ["(2,0)", "(1,1)", "(0,2)"].iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(q.basis.states(), &states[..]);
    let (o, z) = (Scalar::one(), Scalar::zero());
    let one_t = &o + &t;
    let expect = [
        [p(std::slice::from_ref(&o)), p(&[z.clone(), -o.clone()]), p(&[z.clone(), z.clone(), o.clone()])],
        [p(&[z.clone(), -(&one_t * &x)]), p(&[o.clone(), z.clone(), x.clone()]), p(&[z.clone(), -one_t.clone()])],
        [p(&[z.clone(), z.clone(), &x * &x]), p(&[z.clone(), -x.clone()]), p(std::slice::from_ref(&o))],
    ];
    for (r, row) in expect.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            assert_eq!(&coeffs(&q.op, r, c, 3), e, "entry ({r}, {c})");
        }
    }
}

#[test]
fn closed_form_and_trace_agree() {
    let (t, x) = (frac(1, 3), int(2));
    for sites in 1..=3 {
        for n in 0..=3 {
            let closed = build_qmatrix(sites, n, &x, &t).unwrap().op;
            let trace = build_qmatrix_trace(sites, n, &x, &t).unwrap().op;
            assert_eq!(closed.first_mismatch(&trace), None, "N={sites} n={n}");
        }
    }
}

#[test]
fn degree_zero_block_has_unit_diagonal() {
    let q = build_qmatrix(3, 3, &int(2), &frac(1, 3)).unwrap();
    for i in 0..q.basis.len() {
        assert_eq!(q.op.get(0, i, i), Scalar::one());
    }
}

#[test]
fn tq_relation() {
    let (t, x) = (frac(1, 3), int(2));
    for sites in 1..=3 {
        for n in 0..=3 {
            let out = tq_check(sites, n, &x, &t, &frac(3, 7)).unwrap();
            assert!(out.passed, "{}", out.detail);
        }
    }
    assert!(tq_check(3, 2, &int(3), &frac(2, 5), &frac(-1, 2)).unwrap().passed);
    assert!(tq_check(4, 4, &int(3), &frac(2, 5), &frac(-1, 2)).unwrap().passed);
    assert!(tq_check(2, 2, &int(3), &int(0), &int(1)).is_err());
}

#[test]
fn commutation_relations() {
    let (t, x) = (frac(1, 3), int(2));
    for sites in 1..=3 {
        for n in 0..=3 {
            assert!(lambda_q_commute_check(sites, n, &x, &t).unwrap().passed);
            assert!(q_q_commute_check(sites, n, &x, &t).unwrap().passed, "N={sites} n={n}");
            assert!(q_translation_check(sites, n, &x, &t).unwrap().passed);
        }
    }
    assert!(lambda_q_commute_check(4, 4, &frac(-3, 2), &frac(3, 5)).unwrap().passed);
    assert!(q_translation_check(4, 4, &frac(-3, 2), &frac(3, 5)).unwrap().passed);
}

#[test]
fn hermitian_structure() {
    for sites in 1..=4 {
        for n in 0..=3 {
            let out = q_hermiticity_check(sites, n, &frac(2, 1), &frac(1, 3)).unwrap();
            assert!(out.passed, "{}", out.detail);
        }
    }
}

#[test]
fn triangularity() {
    let t = frac(2, 7);
    for (a, c) in [(3, 1), (4, 0), (2, 2), (5, 2)] {
        let out = triangularity_check(a, c, &frac(3, 5), &t).unwrap();
        assert!(out.passed, "{}", out.detail);
    }
}

#[test]
fn hall_pieri_projection() {
    for sites in 1..=3 {
        for u in [frac(-5, 2), frac(1, 3), int(5)] {
            let out = ar_project_check(sites, &u, &frac(1, 3), 7).unwrap();
            assert!(out.passed, "{}", out.detail);
        }
    }
}

#[test]
fn intertwining_four_relations_at_unit_ratio() {
    let out = intertwining_check(&frac(3, 2), &frac(3, 2), &frac(1, 3), 12, 5).unwrap();
    assert!(out.passed, "{}", out.detail);
}

fn rational() -> impl Strategy<Value = Scalar> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=7).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tq_random(t in rational(), x in rational(), z in rational(), sites in 1usize..=3, n in 0usize..=3) {
        let out = tq_check(sites, n, &x, &t, &z).unwrap();
        prop_assert!(out.passed, "{}", out.detail);
    }

    #[test]
    fn triangularity_random(t in rational(), z in rational(), c in 0i64..=3, gap in 0i64..=3) {
        let out = triangularity_check(c + gap, c, &z, &t).unwrap();
        prop_assert!(out.passed, "{}", out.detail);
    }

    #[test]
    fn intertwining_random(t in rational(), z in rational(), u in rational()) {
        prop_assume!(t != int(1) && t != int(-1));
        let out = intertwining_check(&z, &u, &t, 10, 4).unwrap();
        prop_assert!(out.passed, "{}", out.detail);
    }
}
