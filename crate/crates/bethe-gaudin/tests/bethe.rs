use bethe_gaudin::*;
use exact_core::{frac, int, Scalar};
use hall_littlewood::{hl_r, Alphabet};
use num_complex::Complex64;
use proptest::prelude::*;

fn z_sample() -> Complex64 {
    Complex64::new(0.37, 0.1)
}

#[test]
fn zero_spin_matches_hall_littlewood() {
    let t = frac(2, 7);
    let u = vec![frac(1, 3), frac(-2, 5), frac(3, 4)];
    for mu in [vec![3, 1, 0], vec![2, 2, -1], vec![4, 4, 4], vec![0, -1, -3]] {
        let ours = bethe_vector(&mu, &u, &t, &int(0), false).unwrap();
        assert_eq!(ours, hl_r(&mu, &Alphabet::direct(u.clone()), &t).unwrap());
    }
}

#[test]
fn one_particle_vector_is_a_power() {
    let (u, s, t) = (frac(2, 9), frac(1, 6), frac(1, 3));
    let x = (&u + &s) / (int(1) + &u * &s);
    for mu in -2..5 {
        let expected = exact_core::pow(&x, mu).unwrap();
        assert_eq!(bethe_vector(&[mu], std::slice::from_ref(&u), &t, &s, false).unwrap(), expected);
    }
}

#[test]
fn solver_reproduces_closed_form_roots() {
    let params = ChainParams { sites: 3, particles: 1, t: frac(1, 3), s: int(0), x: frac(3, 2) };
    let report = bethe_solve(&params, &SolverConfig::default()).unwrap();
    assert_eq!(report.solutions.len(), 3);
    let modulus = 1.5f64.powf(1.0 / 3.0);
    for k in 0..3 {
        let angle = 2.0 * std::f64::consts::PI * k as f64 / 3.0;
        let root = Complex64::from_polar(modulus, angle);
        assert!(report.solutions.iter().any(|s| (s.roots[0] - root).norm() < 1e-9));
    }
    for sol in &report.solutions {
        let check = periodic_eigen_check(sol, z_sample()).unwrap();
        assert!(check.passed && check.deviation < 1e-10, "{check:?}");
    }
}

#[test]
fn empty_sector_eigenvalue() {
    let params = ChainParams { sites: 4, particles: 0, t: frac(1, 3), s: frac(1, 6), x: frac(7, 5) };
    let report = bethe_solve(&params, &SolverConfig::default()).unwrap();
    let sol = &report.solutions[0];
    let z = z_sample();
    let (w1, w3) = (1.0 + z / 6.0, z + 1.0 / 6.0);
    assert!((periodic_eigenvalue(sol, z) - (w1.powi(4) + 1.4 * w3.powi(4))).norm() < 1e-12);
    assert!(periodic_eigen_check(sol, z).unwrap().passed);
}

#[test]
fn periodic_eigenvectors() {
    for (sites, particles, s) in [(3, 2, int(0)), (3, 2, frac(1, 6)), (4, 2, frac(1, 5)), (3, 3, frac(1, 4)), (5, 2, int(0))] {
        let params = ChainParams { sites, particles, t: frac(1, 3), s, x: frac(17, 10) };
        let report = bethe_solve(&params, &SolverConfig::default()).unwrap();
        assert!(!report.solutions.is_empty(), "no roots for N = {sites}, M = {particles}");
        for sol in &report.solutions {
            assert!(sol.max_residual() < 1e-10);
            let check = periodic_eigen_check(sol, z_sample()).unwrap();
            assert!(check.passed, "{check:?}");
        }
    }
}

#[test]
fn unit_twist_zero_spin_root_set() {
    let params = ChainParams { sites: 3, particles: 2, t: frac(1, 3), s: int(0), x: int(1) };
    let report = bethe_solve(&params, &SolverConfig { seeds: 40, ..SolverConfig::default() }).unwrap();
    assert!(!report.solutions.is_empty());
    for sol in &report.solutions {
        assert!(sol.residuals.iter().all(|r| *r < 1e-10));
        assert!((sol.roots[0] - sol.roots[1]).norm() > 1e-6);
    }
}

#[test]
fn interior_rows_exact() {
    let (t, z) = (frac(3, 10), frac(1, 5));
    let u = [frac(2, 5), frac(-1, 4), frac(11, 20)];
    for s in [int(0), frac(1, 6)] {
        for mu in [vec![3, 1, 0], vec![2, 2, -1], vec![5, 5, 5]] {
            for m in 1..=3 {
                let check = interior_eigen_check(&mu[..m], &u[..m], &z, &s, &t).unwrap();
                assert!(check.passed, "{check:?}");
            }
        }
    }
    assert!(interior_eigen_check(&[], &[], &z, &frac(1, 6), &t).unwrap().passed);
}

#[test]
fn interior_rows_ordering_and_errors() {
    let (t, z, s) = (frac(3, 10), frac(1, 5), frac(1, 6));
    let u = [frac(2, 5), frac(-1, 4)];
    let good = interior_eigen_check(&[2, 0], &u, &z, &s, &t).unwrap();
    assert!(good.passed);
    let swapped = [u[1].clone(), u[0].clone()];
    assert!(interior_eigen_check(&[2, 0], &swapped, &z, &s, &t).unwrap().passed);
    let broken = interior_eigen_check(&[0, 2], &u, &z, &s, &t);
    assert!(broken.is_err());
}

#[test]
fn graded_interior_rows() {
    let t = frac(1, 3);
    let u = vec![frac(1, 2), frac(-2, 3)];
    for mu in [vec![1, 0], vec![2, 2], vec![0, -3]] {
        let check = interior_graded_check(&mu, &u, &t, 5).unwrap();
        assert!(check.passed, "{check:?}");
    }
}

#[test]
fn eigen_series_oracle() {
    let t = frac(1, 3);
    let u = [frac(1, 2)];
    let series = eigen_series(&u, &t, 3);
    let tail = frac(1, 2) * (int(1) - &t);
    assert_eq!(series[0], int(1));
    assert_eq!(series[1], tail.clone());
    assert_eq!(series[2], &tail * frac(1, 2));
}

#[test]
fn line_weights_free_motion() {
    let (z, t) = (frac(1, 2), frac(1, 3));
    let w = spin_line_weight(&[0], &[3], &z, &int(0), &t).unwrap();
    assert_eq!(w, frac(1, 12));
    assert_eq!(spin_line_weight(&[0], &[0], &z, &int(0), &t).unwrap(), int(1));
    assert_eq!(spin_line_weight(&[2, 0], &[3, 3], &z, &int(0), &t).unwrap(), Scalar::from_integer(0.into()));
}

#[test]
fn two_body_cancellation() {
    let (z, s, t) = (frac(3, 5), frac(1, 6), frac(2, 7));
    for (u1, u2) in [(frac(1, 3), frac(2, 9)), (frac(-3, 4), frac(5, 2))] {
        assert!(two_body_check(&z, &s, &t, &u1, &u2).unwrap().passed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn two_body_random(z in 1i64..9, s in 0i64..5, t in 1i64..9, a in -9i64..9, b in -9i64..9) {
        let (z, s, t) = (frac(z, 10), frac(s, 10), frac(t, 10));
        let (u1, u2) = (frac(a, 11), frac(b, 13));
        prop_assume!(u1 != u2);
        prop_assume!(z.clone() * &s != int(-1));
        let weights = BoltzmannWeights::new(&z, &s, &t);
        for u in [&u1, &u2] {
            let x = (u + &s) / (int(1) + u * &s);
            prop_assume!(weights.omega[1] != (x * &weights.omega[3]));
        }
        prop_assert!(two_body_check(&z, &s, &t, &u1, &u2).unwrap().passed);
    }

    #[test]
    fn geometric_sum_random(z in 1i64..9, s in 0i64..5, t in 1i64..9, m2 in -3i64..3, gap in 1i64..5, a in 1i64..9) {
        let (z, s, t) = (frac(z, 10), frac(s, 10), frac(t, 10));
        let weights = BoltzmannWeights::new(&z, &s, &t);
        let x = frac(a, 7);
        prop_assume!(weights.omega[1] != &x * &weights.omega[3]);
        prop_assert!(geometric_sum_check(&weights, &x, m2, m2 + gap).unwrap().passed);
    }

    #[test]
    fn interior_random(a in 1i64..9, b in -9i64..-1, mu0 in 0i64..4, gap in 0i64..3, s in 0i64..3) {
        let (t, z, s) = (frac(2, 7), frac(1, 4), frac(s, 7));
        let u = [frac(a, 10), frac(b, 10)];
        let mu = [mu0 + gap, mu0];
        prop_assert!(interior_eigen_check(&mu, &u, &z, &s, &t).unwrap().passed);
    }
}

#[test]
fn non_roots_fail_periodic_check() {
    let params = ChainParams { sites: 3, particles: 2, t: frac(1, 3), s: frac(1, 6), x: frac(17, 10) };
    let roots = vec![Complex64::new(0.3, 0.2), Complex64::new(-0.5, 0.1)];
    let fake = BetheSystem { params, roots, residuals: vec![] };
    assert!(!periodic_eigen_check(&fake, z_sample()).unwrap().passed);
}
