use std::collections::BTreeMap;
use std::fmt::Display;

use exact_core::{format_scalar, frac, int, CheckOutcome, GradedOperator, Scalar, SparseMatrix};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use baxter_q::{
    ar_project_check, build_qmatrix, build_qmatrix_trace, intertwining_check, lambda_q_commute_check, q_hermiticity_check,
    q_q_commute_check, q_translation_check, tq_check, triangularity_check,
};
use bethe_gaudin::{
    bethe_solve, gaudin_agreement, gaudin_det, gaudin_sum, geometric_sum_check, interior_eigen_check, interior_graded_check,
    lascoux_reduction_check, periodic_eigen_check, two_body_check, xi, BoltzmannWeights, ChainParams, SolverConfig,
};
use hall_littlewood::{pieri_coeff, pieri_rule_check, Alphabet, CauchyKind, PieriKind, PieriRule};
use lattice_models::{
    hermiticity_check, open_boson_transfer, open_toda_transfer, periodic_transfer, rll_check, toda_gauge_check,
    toda_trace_transfer, trace_transfer, LocalWeights, OpenKind,
};
use partition_space::{partitions_of, strips_below, Basis, PartitionConstraint, StripKind};
use vertex_operators::{
    build_eigenstate, build_gamma, eigenvalue_series, gamma_adjoint_check, gamma_commutation_check, gamma_eigen_check,
    pieri_covector_check, Family, Sign, StateKind,
};

use crate::draw::{draw_params, DrawStrategy, ParamSet};
use crate::{Suite, SuiteError, SuiteSpec};

type Run = Box<dyn Fn() -> Result<CheckOutcome, String> + Send + Sync>;

pub(crate) struct Job {
    pub name: String,
    pub identity: &'static str,
    pub run: Run,
}

fn job<E: Display>(
    name: String,
    identity: &'static str,
    f: impl Fn() -> Result<CheckOutcome, E> + Send + Sync + 'static,
) -> Job {
    Job { name, identity, run: Box::new(move || f().map_err(|e| e.to_string())) }
}

#[derive(Default)]
pub(crate) struct Plan {
    pub params: BTreeMap<String, String>,
    pub jobs: Vec<Job>,
}

impl Plan {
    fn param(&mut self, key: &str, value: impl Display) {
        self.params.insert(key.to_string(), value.to_string());
    }
}

mod identity {
    pub const RLL: &str = "R12(u/v) L1(u) L2(v) = L2(v) L1(u) R12(u/v)";
    pub const YBQ: &str = "R(z/u) L^Toda(z) LL(u) = LL(u) L~(z) R(z/u) and its four component relations";
    pub const PIERI: &str = "q_r(U) Q_mu(U) = sum over horizontal r-strips psi_{lambda/mu} Q_lambda(U)";
    pub const PIERI_MATRIX: &str = "<U| Gamma_{L,-} degree r = q_r(U) <U|";
    pub const HALL: &str = "e_r(V) P_mu(V) = sum over vertical r-strips psi'_{lambda/mu} P_lambda(V)";
    pub const HALL_MATRIX: &str = "Gamma_{R,+} |L,V> = Omega~(V z) |L,V>";
    pub const CAUCHY: &str = "sum Q_lambda(U) P_lambda(V) = prod (1 - t u v)/(1 - u v)";
    pub const DUAL_CAUCHY: &str = "sum <lambda|lambda> Q^w_lambda'(U) P_lambda(V) = prod (1 + u v)";
    pub const GAMMA_COMMUTE: &str = "Gamma_{a,+}(u) Gamma_{b,-}(v) = K_ab(v/u) Gamma_{b,-}(v) Gamma_{a,+}(u)";
    pub const GAMMA_EIGEN_LL: &str = "Gamma_{L,+}(z) |L,V> = Omega(z V) |L,V>";
    pub const GAMMA_EIGEN_LR: &str = "Gamma_{L,+}(z) |R,V> = Omega~(z V) |R,V>";
    pub const GAMMA_EIGEN_RL: &str = "Gamma_{R,+}(z) |L,V> = Omega~(z V) |L,V>";
    pub const OPEN_FINITE: &str = "open chain A_N, A_N^Toda = Gamma_{L,-} and Abar_N = Gamma_{L,+} on lambda_1 <= N";
    pub const TQ: &str = "Lambda_N(z) q_n(z) = q_n(tz) + x z^N t^n q_n(z/t)";
    pub const TRIANGULAR: &str = "gauge-transformed L' on the null vector is triangular with diagonal psi(tz), z X psi(z/t)";
    pub const LAMBDA_Q: &str = "[Lambda(z1), q(z2)] = 0";
    pub const Q_Q: &str = "[q(z1), q(z2)] = 0";
    pub const Q_TRANSLATION: &str = "[q(z), T] = 0";
    pub const AR_PROJECT: &str = "(1 + z u) A_N(z) Abar^R_N(u) N^-1 = Abar^R_N(u) N^-1 A~_{N+1}(z)";
    pub const BETHE_INTERIOR: &str = "sum_lambda R_lambda(U) A_{lambda mu}(z) = prod (1 - z t u)/(1 - z u) R_mu(U)";
    pub const BETHE_GRADED: &str = "interior eigen-relation at s = 0, degree by degree in z";
    pub const BETHE_PERIODIC: &str = "Bethe roots: residual < 1e-10 and |R Lambda^s - Lambda~ R|_inf < tol";
    pub const BETHE_ONE: &str = "M = 1 roots: xi(u)^N = x";
    pub const TWO_BODY: &str = "B(u1,u2) C(xi2,xi1) + B(u2,u1) C(xi1,xi2) = 0";
    pub const GEOMETRIC: &str = "sum D(m2,n) Dbar(n,m1) xi^n = Xhat w1^(m1-m2-1) xi^m2 + Yhat w3^(m1-m2-1) xi^m1";
    pub const GAUDIN: &str = "sum_mu R^s_mu(U) R^s_mu(V)/<mu|mu>_s = t^(n(n-1)/2) (1-t)^-n D_n/delta_n";
    pub const LASCOUX: &str = "Hecke symmetrization of Omega (1 - t tau0)...(1 - t^n tau0) = t^(n(n-1)/2) (1-t)^n D_n/delta_n";
    pub const GAMMA_ADJOINT: &str = "Gamma_{a,+} = N^-1 Gamma_{a,-}^T N";
    pub const PHI_PSI: &str = "phi_{lambda/mu} = psi_{lambda/mu} <lambda|lambda>/<mu|mu>";
    pub const LAMBDA_HERMITE: &str = "N^-1 Lambda(1/x)^T N, coefficient j = Lambda(x) coefficient N-j / x";
    pub const Q_HERMITE: &str = "T N^-1 q(1/x)^T N, coefficient j = (-1)^n q(x) coefficient n-j";
    pub const GAUGE: &str = "U_{k-1} L^Toda_k = L_{k-1} U_k, U_0 T^Toda = T_N U_N, D U_0 = U_N D^Toda";
    pub const CONSTRUCTIONS: &str = "pi-expansion = auxiliary trace = Toda trace for Lambda_N";
    pub const OPEN_GAUGE: &str = "open A_N from q-boson Lax = open A_N from Toda Lax";
    pub const PRINTED_LAMBDA: &str = "Lambda_2(z) at N = n = 2 equals the printed 3x3 matrix";
    pub const PRINTED_Q: &str = "q_2(z) at N = n = 2 equals the printed 3x3 matrix";
}

fn show(x: &Scalar) -> String {
    format_scalar(x)
}

fn show_list(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(show).collect::<Vec<_>>().join(","))
}

fn overridden(spec: &SuiteSpec, mut draws: Vec<ParamSet>) -> Vec<ParamSet> {
    for p in &mut draws {
        if let Some(t) = &spec.t {
            p.t = t.clone();
        }
        if let Some(x) = &spec.x {
            p.x = x.clone();
        }
    }
    draws
}

fn draws(spec: &SuiteSpec, strategy: DrawStrategy) -> Vec<ParamSet> {
    overridden(spec, draw_params(spec.seed, strategy, spec.draws()))
}

fn infeasible(msg: impl Into<String>) -> SuiteError {
    SuiteError::Infeasible(msg.into())
}

fn require(cond: bool, msg: impl Into<String>) -> Result<(), SuiteError> {
    if cond {
        Ok(())
    } else {
        Err(infeasible(msg))
    }
}

const MAX_LATTICE_SITES: usize = 6;
const MAX_LATTICE_PARTICLES: usize = 6;

fn lattice_sizes(spec: &SuiteSpec, sites: std::ops::RangeInclusive<usize>, particles: std::ops::RangeInclusive<usize>) -> Result<(Vec<usize>, Vec<usize>), SuiteError> {
    let ns = spec.sites_or(sites);
    let ps = spec.particles_or(particles);
    require(ns.iter().all(|&n| (1..=MAX_LATTICE_SITES).contains(&n)), format!("sites must lie in 1..={MAX_LATTICE_SITES}"))?;
    require(ps.iter().all(|&n| n <= MAX_LATTICE_PARTICLES), format!("particles must be <= {MAX_LATTICE_PARTICLES}"))?;
    Ok((ns, ps))
}

pub(crate) fn plan(spec: &SuiteSpec) -> Result<Plan, SuiteError> {
    require(spec.draws() > 0, "at least one draw")?;
    let mut plan = Plan::default();
    plan.param("draws", spec.draws());
    match spec.suite {
        Suite::Rll => rll(spec, &mut plan)?,
        Suite::Pieri => pieri(spec, &mut plan, PieriRule::Complete)?,
        Suite::HallPieri => pieri(spec, &mut plan, PieriRule::Elementary)?,
        Suite::Cauchy => cauchy(spec, &mut plan, CauchyKind::Cauchy)?,
        Suite::DualCauchy => cauchy(spec, &mut plan, CauchyKind::Dual)?,
        Suite::GammaCommute => gamma_commute(spec, &mut plan)?,
        Suite::GammaEigen => gamma_eigen(spec, &mut plan)?,
        Suite::Tq => tq(spec, &mut plan)?,
        Suite::LambdaQ => lambda_q(spec, &mut plan)?,
        Suite::ArProject => ar_project(spec, &mut plan)?,
        Suite::Bethe => bethe(spec, &mut plan)?,
        Suite::Gaudin => gaudin(spec, &mut plan)?,
        Suite::Lascoux => lascoux(spec, &mut plan)?,
        Suite::Adjoint => adjoint(spec, &mut plan)?,
        Suite::Gauge => gauge(spec, &mut plan)?,
        Suite::PaperMatrices => paper_matrices(spec, &mut plan)?,
    }
    Ok(plan)
}

fn rll(spec: &SuiteSpec, plan: &mut Plan) -> Result<(), SuiteError> {
    let cap = spec.cap.unwrap_or(5);
    require(cap >= 4, "RLL needs cap >= 4")?;
    let window = spec.degree.unwrap_or(4) as i64;
    let label_cap = window + 6;
    plan.param("cap", cap);
    plan.param("intertwining window", window);
    for (i, p) in draws(spec, DrawStrategy::GenericT { vars: 2 }).into_iter().enumerate() {
        let (u, v, t) = (p.u[0].clone(), p.u[1].clone(), p.t.clone());
        let name = format!("rll draw {i}: u={} v={} t={}", show(&u), show(&v), show(&t));
        plan.jobs.push(job(name, identity::RLL, move || rll_check(&u, &v, &t, cap)));
        let (z, w, t) = (p.z.clone(), p.v[0].clone(), p.t.clone());
        let name = format!("toda intertwining draw {i}: z={} u={} t={}", show(&z), show(&w), show(&t));
        plan.jobs.push(job(name, identity::YBQ, move || intertwining_check(&z, &w, &t, label_cap, window)));
    }
    Ok(())
}

fn pieri(spec: &SuiteSpec, plan: &mut Plan, rule: PieriRule) -> Result<(), SuiteError> {
    let vars = spec.sites.unwrap_or(3);
    let max_weight = spec.cap.unwrap_or(5);
    let max_r = spec.degree.unwrap_or(3);
    require(vars <= hall_littlewood::MAX_VARIABLES, "too many variables")?;
    plan.param("variables", vars);
    plan.param("max |mu|", max_weight);
    plan.param("max r", max_r);
    for (i, p) in draws(spec, DrawStrategy::GenericT { vars }).into_iter().enumerate() {
        let t = p.t.clone();
        let values = match rule {
            PieriRule::Complete => p.u.clone(),
            PieriRule::Elementary => p.v.clone(),
        };
        let alphabet = Alphabet::direct(values.clone());
        let (identity, label) = match rule {
            PieriRule::Complete => (identity::PIERI, "pieri"),
            PieriRule::Elementary => (identity::HALL, "hall-pieri"),
        };
        let name = format!("{label} draw {i}: t={} vars={}", show(&t), show_list(&values));
        let a = alphabet.clone();
        let tt = t.clone();
        plan.jobs.push(job(name, identity, move || {
            let mut outcomes = Vec::new();
            for d in 0..=max_weight {
                for mu in partitions_of(d, None, None) {
                    for r in 0..=max_r {
                        outcomes.push(pieri_rule_check(rule, &mu, r, &a, &tt)?);
                    }
                }
            }
            Ok::<_, hall_littlewood::HlError>(CheckOutcome::all(outcomes, format!("|mu| <= {max_weight}, r <= {max_r}")))
        }));
        let basis = Basis::weight_capped(max_weight + max_r);
        let name = format!("{label} matrix form draw {i}");
        match rule {
            PieriRule::Complete => {
                plan.jobs.push(job(name, identity::PIERI_MATRIX, move || pieri_covector_check(&alphabet, &basis, &t, max_r)));
            }
            PieriRule::Elementary => {
                plan.jobs.push(job(name, identity::HALL_MATRIX, move || {
                    let op = build_gamma(Family::R, Sign::Plus, &basis, &t)?;
                    let state = build_eigenstate(StateKind::L, &alphabet, &basis, &t)?;
                    let eigen = eigenvalue_series(Family::R, StateKind::L, &alphabet, &t, max_r)?;
                    gamma_eigen_check(&op, &state, &eigen, max_r)
                }));
            }
        }
    }
    Ok(())
}

fn cauchy(spec: &SuiteSpec, plan: &mut Plan, kind: CauchyKind) -> Result<(), SuiteError> {
    let vars = spec.sites.unwrap_or(3);
    let degree = spec.degree.unwrap_or(6);
    require(vars <= hall_littlewood::MAX_VARIABLES, "too many variables")?;
    plan.param("variables", vars);
    plan.param("degree", degree);
    let identity = match kind {
        CauchyKind::Cauchy => identity::CAUCHY,
        CauchyKind::Dual => identity::DUAL_CAUCHY,
    };
    for (i, p) in draws(spec, DrawStrategy::GenericT { vars }).into_iter().enumerate() {
        let name = format!("{} draw {i}: t={} U={} V={}", spec.suite, show(&p.t), show_list(&p.u), show_list(&p.v));
        let (u, v, t) = (Alphabet::direct(p.u), Alphabet::direct(p.v), p.t);
        plan.jobs.push(job(name, identity, move || hall_littlewood::cauchy_coeff_check(degree, &u, &v, &t, kind)));
    }
    Ok(())
}

fn gamma_window(spec: &SuiteSpec) -> Result<(usize, usize), SuiteError> {
    let cap = spec.cap.unwrap_or(10);
    let degree = spec.degree.unwrap_or(4);
    require(degree <= cap, "degree exceeds weight cap")?;
    require(cap <= 14, "weight cap above 14")?;
    Ok((cap, degree))
}

fn gamma_commute(spec: &SuiteSpec, plan: &mut Plan) -> Result<(), SuiteError> {
    let (cap, degree) = gamma_window(spec)?;
    plan.param("cap", cap);
    plan.param("degree", degree);
    for (i, p) in draws(spec, DrawStrategy::GenericT { vars: 0 }).into_iter().enumerate() {
        for (a, b) in [(Family::L, Family::L), (Family::L, Family::R), (Family::R, Family::L), (Family::R, Family::R)] {
            let t = p.t.clone();
            let name = format!("gamma {a:?}{b:?} draw {i}: t={}", show(&t));
            plan.jobs.push(job(name, identity::GAMMA_COMMUTE, move || {
                gamma_commutation_check(a, b, &t, &Basis::weight_capped(cap), degree)
            }));
        }
    }
    Ok(())
}

fn restricted(sites: usize, cap: usize) -> Basis<partition_space::Partition> {
    Basis::partitions(PartitionConstraint { max_weight: cap, max_part: Some(sites), max_length: None })
}

fn operator_equality(left: &GradedOperator, right: &GradedOperator, what: &str) -> CheckOutcome {
    let mismatch = left.first_mismatch(right).map(|m| format!("degree {} entry ({}, {}): {} != {}", m.degree, m.row, m.col, m.left, m.right));
    CheckOutcome::exact(mismatch, what)
}

fn gamma_eigen(spec: &SuiteSpec, plan: &mut Plan) -> Result<(), SuiteError> {
    let (cap, degree) = gamma_window(spec)?;
    let sizes = spec.sites_or(1..=3);
    require(sizes.iter().all(|&n| n <= hall_littlewood::MAX_VARIABLES), "too many variables")?;
    let max_vars = sizes.iter().copied().max().unwrap_or(0);
    plan.param("cap", cap);
    plan.param("degree", degree);
    plan.param("N", format!("{sizes:?}"));
    let cases = [
        (Family::L, StateKind::L, identity::GAMMA_EIGEN_LL),
        (Family::L, StateKind::R, identity::GAMMA_EIGEN_LR),
        (Family::R, StateKind::L, identity::GAMMA_EIGEN_RL),
    ];
    for (i, p) in draws(spec, DrawStrategy::GenericT { vars: max_vars }).into_iter().enumerate() {
        for &n in &sizes {
            let vars = p.v[..n].to_vec();
            for (family, state, identity) in cases {
                let t = p.t.clone();
                let alphabet = Alphabet::direct(vars.clone());
                let name = format!("Gamma_{family:?}+ on |{state:?},V> N={n} draw {i}: t={} V={}", show(&t), show_list(&vars));
                plan.jobs.push(job(name, identity, move || {
                    let basis = Basis::weight_capped(cap);
                    let op = build_gamma(family, Sign::Plus, &basis, &t)?;
                    let vector = build_eigenstate(state, &alphabet, &basis, &t)?;
                    let eigen = eigenvalue_series(family, state, &alphabet, &t, degree)?;
                    gamma_eigen_check(&op, &vector, &eigen, degree)
                }));
            }
            let t = p.t.clone();
            let name = format!("open chain vs Gamma N={n} draw {i}: t={}", show(&t));
            plan.jobs.push(job(name, identity::OPEN_FINITE, move || {
                let basis = restricted(n, cap);
                let minus = build_gamma(Family::L, Sign::Minus, &basis, &t).map_err(|e| e.to_string())?.op;
                let plus = build_gamma(Family::L, Sign::Plus, &basis, &t).map_err(|e| e.to_string())?.op;
                let boson = open_boson_transfer(n, &basis, &t).map_err(|e| e.to_string())?;
                let toda = open_toda_transfer(OpenKind::A, n, &basis, &t).map_err(|e| e.to_string())?;
                let bar = open_toda_transfer(OpenKind::ABar, n, &basis, &t).map_err(|e| e.to_string())?;
                Ok::<_, String>(CheckOutcome::all(
                    [
                        operator_equality(&boson, &minus, "A_N vs Gamma_{L,-}"),
                        operator_equality(&toda, &minus, "A_N^Toda vs Gamma_{L,-}"),
                        operator_equality(&bar, &plus, "Abar_N vs Gamma_{L,+}"),
                    ],
                    format!("lambda_1 <= {n}, weight <= {cap}"),
                ))
            }));
        }
    }
    Ok(())
}

fn tq(spec: &SuiteSpec, plan: &mut Plan) -> Result<(), SuiteError> {
    let (ns, ps) = lattice_sizes(spec, 1..=4, 0..=4)?;
    plan.param("N", format!("{ns:?}"));
    plan.param("n", format!("{ps:?}"));
    for (i, p) in draws(spec, DrawStrategy::GenericT { vars: 0 }).into_iter().enumerate() {
        for &n_sites in &ns {
            for &n in &ps {
                let (x, t, z) = (p.x.clone(), p.t.clone(), p.z.clone());
                let name = format!("tq N={n_sites} n={n} draw {i}: t={} x={}", show(&t), show(&x));
                plan.jobs.push(job(name, identity::TQ, move || tq_check(n_sites, n, &x, &t, &z)));
            }
        }
        for (a, c) in [(2, 0), (3, 1), (4, 0)] {
            let (z, t) = (p.z.clone(), p.t.clone());
            let name = format!("null vector a={a} c={c} draw {i}: z={} t={}", show(&z), show(&t));
            plan.jobs.push(job(name, identity::TRIANGULAR, move || triangularity_check(a, c, &z, &t)));
        }
    }
    Ok(())
}

fn lambda_q(spec: &SuiteSpec, plan: &mut Plan) -> Result<(), SuiteError> {
    let (ns, ps) = lattice_sizes(spec, 1..=3, 0..=3)?;
    plan.param("N", format!("{ns:?}"));
    plan.param("n", format!("{ps:?}"));
    for (i, p) in draws(spec, DrawStrategy::GenericT { vars: 0 }).into_iter().enumerate() {
        for &n_sites in &ns {
            for &n in &ps {
                let suffix = format!("N={n_sites} n={n} draw {i}: t={} x={}", show(&p.t), show(&p.x));
                let (x, t) = (p.x.clone(), p.t.clone());
                plan.jobs.push(job(format!("[Lambda, q] {suffix}"), identity::LAMBDA_Q, move || lambda_q_commute_check(n_sites, n, &x, &t)));
                let (x, t) = (p.x.clone(), p.t.clone());
                plan.jobs.push(job(format!("[q, q] {suffix}"), identity::Q_Q, move || q_q_commute_check(n_sites, n, &x, &t)));
                let (x, t) = (p.x.clone(), p.t.clone());
                plan.jobs.push(job(format!("[q, T] {suffix}"), identity::Q_TRANSLATION, move || q_translation_check(n_sites, n, &x, &t)));
            }
        }
    }
    Ok(())
}

fn ar_project(spec: &SuiteSpec, plan: &mut Plan) -> Result<(), SuiteError> {
    let ns = spec.sites_or(1..=3);
    let cap = spec.cap.unwrap_or(7);
    require(ns.iter().all(|&n| n >= 1 && n < cap), "need 1 <= N < cap")?;
    require(cap <= 12, "weight cap above 12")?;
    plan.param("N", format!("{ns:?}"));
    plan.param("cap", cap);
    for (i, p) in draws(spec, DrawStrategy::GenericT { vars: 1 }).into_iter().enumerate() {
        for &n in &ns {
            let (u, t) = (p.u[0].clone(), p.t.clone());
            let name = format!("A^R projection N={n} draw {i}: u={} t={}", show(&u), show(&t));
            plan.jobs.push(job(name, identity::AR_PROJECT, move || ar_project_check(n, &u, &t, cap)));
        }
    }
    Ok(())
}

fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `ξ^{-1}(y) = (y - s)/(1 - y s)`.
fn xi_inverse(y: Complex64, s: f64) -> Complex64 {
    (y - s) / (1.0 - y * s)
}

fn one_particle_oracle(sol_roots: &[Complex64], sites: usize, x: f64, s: f64) -> f64 {
    let modulus = x.abs().powf(1.0 / sites as f64);
    let phase = if x < 0.0 { std::f64::consts::PI } else { 0.0 };
    let closed: Vec<Complex64> = (0..sites)
        .map(|k| {
            let angle = (phase + 2.0 * std::f64::consts::PI * k as f64) / sites as f64;
            xi_inverse(Complex64::from_polar(modulus, angle), s)
        })
        .collect();
    sol_roots
        .iter()
        .map(|u| closed.iter().map(|c| (u - c).norm()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}

const INTERIOR_WINDOWS: [[i64; 3]; 3] = [[3, 1, 0], [2, 2, -1], [4, 4, 4]];

fn bethe(spec: &SuiteSpec, plan: &mut Plan) -> Result<(), SuiteError> {
    let sites = spec.sites.unwrap_or(3);
    require((1..=bethe_gaudin::MAX_SITES).contains(&sites), "Bethe chain needs 1 <= N <= 6")?;
    let interior: Vec<usize> = spec.particles_or(0..=3);
    let periodic: Vec<usize> = spec.particles_or(0..=2);
    require(interior.iter().all(|&m| m <= 3), "interior rows need M <= 3")?;
    require(periodic.iter().all(|&m| m <= bethe_gaudin::MAX_PARTICLES), "Bethe solver needs M <= 3")?;
    let tolerance = spec.tolerance.unwrap_or(bethe_gaudin::PERIODIC_TOLERANCE);
    plan.param("N", sites);
    plan.param("M", format!("{periodic:?}"));
    plan.param("tolerance", format!("{tolerance:e}"));
    let mut solver_seeds = crate::draw::Drawer::new(spec.seed ^ 0x5eed);
    for (i, p) in draws(spec, DrawStrategy::Bethe { vars: 3 }).into_iter().enumerate() {
        for &m in &interior {
            for window in INTERIOR_WINDOWS {
                let (mu, u, z, s, t) = (window[..m].to_vec(), p.u[..m].to_vec(), p.z.clone(), p.s.clone(), p.t.clone());
                let name = format!("interior M={m} mu={mu:?} draw {i}: z={} s={} t={}", show(&z), show(&s), show(&t));
                plan.jobs.push(job(name, identity::BETHE_INTERIOR, move || interior_eigen_check(&mu, &u, &z, &s, &t)));
            }
            let (mu, u, t) = (INTERIOR_WINDOWS[0][..m].to_vec(), p.u[..m].to_vec(), p.t.clone());
            let name = format!("interior graded M={m} draw {i}: t={}", show(&t));
            plan.jobs.push(job(name, identity::BETHE_GRADED, move || interior_graded_check(&mu, &u, &t, 4)));
        }
        let z = Complex64::new(to_f64(&p.z), to_f64(&p.z) / 2.0);
        for &m in &periodic {
            let params = ChainParams { sites, particles: m, t: p.t.clone(), s: p.s.clone(), x: p.x.clone() };
            let config = SolverConfig { seeds: 40, rng_seed: solver_seeds.next_u64(), ..SolverConfig::default() };
            let name = format!(
                "periodic N={sites} M={m} draw {i}: t={} s={} x={}",
                show(&params.t),
                show(&params.s),
                show(&params.x)
            );
            let solve_params = params.clone();
            plan.jobs.push(job(name, identity::BETHE_PERIODIC, move || {
                let report = bethe_solve(&solve_params, &config)?;
                if report.solutions.is_empty() {
                    return Ok(CheckOutcome::fail(format!("no solution from {} seeds", config.seeds)));
                }
                let mut outcomes = Vec::new();
                for sol in &report.solutions {
                    outcomes.push(CheckOutcome::within(sol.max_residual(), config.tolerance, "Bethe residual"));
                    let eig = periodic_eigen_check(sol, z)?;
                    outcomes.push(CheckOutcome::within(eig.deviation, tolerance, eig.detail));
                }
                let count = report.solutions.len();
                Ok::<_, bethe_gaudin::BetheError>(CheckOutcome::all(outcomes, format!("{count} solutions")))
            }));
            if m == 1 {
                let name = format!("one-particle oracle N={sites} draw {i}: s={} x={}", show(&params.s), show(&params.x));
                plan.jobs.push(job(name, identity::BETHE_ONE, move || {
                    let report = bethe_solve(&params, &config)?;
                    let roots: Vec<Complex64> = report.solutions.iter().map(|s| s.roots[0]).collect();
                    if roots.is_empty() {
                        return Ok(CheckOutcome::fail("no solution"));
                    }
                    let dev = one_particle_oracle(&roots, sites, to_f64(&params.x), to_f64(&params.s));
                    Ok::<_, bethe_gaudin::BetheError>(CheckOutcome::within(dev, 1e-12, format!("{} roots", roots.len())))
                }));
            }
        }
        let (z, s, t) = (p.z.clone(), p.s.clone(), p.t.clone());
        let (u1, u2) = (p.u[0].clone(), p.u[1].clone());
        let name = format!("two-body draw {i}: u=({},{})", show(&u1), show(&u2));
        plan.jobs.push(job(name, identity::TWO_BODY, move || two_body_check(&z, &s, &t, &u1, &u2)));
        let (z, s, t, u) = (p.z.clone(), p.s.clone(), p.t.clone(), p.u[2].clone());
        let name = format!("geometric sum draw {i}: u={}", show(&u));
        plan.jobs.push(job(name, identity::GEOMETRIC, move || {
            let weights = BoltzmannWeights::new(&z, &s, &t);
            let x = xi(&u, &s)?;
            let outcomes = [(0, 1), (-1, 3), (2, 6)]
                .into_iter()
                .map(|(m2, m1)| geometric_sum_check(&weights, &x, m2, m1))
                .collect::<Result<Vec<_>, _>>()?;
            Ok::<_, bethe_gaudin::BetheError>(CheckOutcome::all(outcomes, "m2 < m1 windows"))
        }));
    }
    Ok(())
}

fn gaudin(spec: &SuiteSpec, plan: &mut Plan) -> Result<(), SuiteError> {
    let sizes = spec.particles_or(1..=2);
    let truncation = spec.cap.unwrap_or(60);
    let bound = spec.tolerance.unwrap_or(1e-12);
    require(sizes.iter().all(|&n| n <= bethe_gaudin::MAX_GAUDIN_SIZE), "Gaudin sums need n <= 3")?;
    plan.param("n", format!("{sizes:?}"));
    plan.param("truncation", truncation);
    plan.param("tail bound limit", format!("{bound:e}"));
    let spins = [int(0), frac(1, 6)];
    plan.param("spins", show_list(&spins));
    let max_n = sizes.iter().copied().max().unwrap_or(0);
    for (i, p) in draws(spec, DrawStrategy::Gaudin { vars: max_n }).into_iter().enumerate() {
        for &n in &sizes {
            for s in &spins {
                let (u, v, t, s) = (p.u[..n].to_vec(), p.v[..n].to_vec(), p.t.clone(), s.clone());
                let name = format!("gaudin n={n} s={} draw {i}: t={} U={} V={}", show(&s), show(&t), show_list(&u), show_list(&v));
                plan.jobs.push(job(name, identity::GAUDIN, move || {
                    let sum = gaudin_sum(&u, &v, &t, &s, truncation)?;
                    let det = gaudin_det(&u, &v, &t)?;
                    let agreement = gaudin_agreement(&sum, &det);
                    if sum.tail_bound > bound {
                        return Ok(CheckOutcome::fail(format!("tail bound {:.3e} above {bound:e}", sum.tail_bound)));
                    }
                    Ok::<_, bethe_gaudin::BetheError>(agreement)
                }));
            }
        }
    }
    Ok(())
}

fn lascoux(spec: &SuiteSpec, plan: &mut Plan) -> Result<(), SuiteError> {
    let sizes = spec.particles_or(1..=3);
    require(sizes.iter().all(|&n| n <= bethe_gaudin::MAX_GAUDIN_SIZE), "Lascoux reduction needs n <= 3")?;
    plan.param("n", format!("{sizes:?}"));
    let max_n = sizes.iter().copied().max().unwrap_or(0);
    for (i, p) in draws(spec, DrawStrategy::GenericT { vars: max_n }).into_iter().enumerate() {
        for &n in &sizes {
            let (u, v, t) = (p.u[..n].to_vec(), p.v[..n].to_vec(), p.t.clone());
            let name = format!("lascoux n={n} draw {i}: t={} U={} V={}", show(&t), show_list(&u), show_list(&v));
            plan.jobs.push(job(name, identity::LASCOUX, move || lascoux_reduction_check(&u, &v, &t)));
        }
    }
    Ok(())
}

fn phi_psi_check(max_weight: usize, t: &Scalar) -> Result<CheckOutcome, hall_littlewood::HlError> {
    let mut count = 0usize;
    for d in 0..=max_weight {
        for lambda in partitions_of(d, None, None) {
            for mu in strips_below(&lambda, StripKind::Horizontal) {
                let phi = pieri_coeff(PieriKind::Phi, &lambda, &mu, t)?;
                let psi = pieri_coeff(PieriKind::Psi, &lambda, &mu, t)?;
                let expected = psi * lambda.state_norm(t) / mu.state_norm(t);
                if phi != expected {
                    return Ok(CheckOutcome::fail(format!("{lambda}/{mu}: {phi} != {expected}")));
                }
                count += 1;
            }
        }
    }
    Ok(CheckOutcome::pass(format!("{count} horizontal strips")))
}

fn adjoint(spec: &SuiteSpec, plan: &mut Plan) -> Result<(), SuiteError> {
    let (ns, ps) = lattice_sizes(spec, 1..=3, 0..=3)?;
    let cap = spec.cap.unwrap_or(6);
    plan.param("N", format!("{ns:?}"));
    plan.param("n", format!("{ps:?}"));
    plan.param("cap", cap);
    for (i, p) in draws(spec, DrawStrategy::GenericT { vars: 0 }).into_iter().enumerate() {
        let t = p.t.clone();
        plan.jobs.push(job(format!("phi/psi norm relation draw {i}: t={}", show(&t)), identity::PHI_PSI, move || phi_psi_check(cap, &t)));
        for family in [Family::L, Family::R] {
            let t = p.t.clone();
            let name = format!("Gamma_{family:?} adjoint pair draw {i}: t={}", show(&t));
            plan.jobs.push(job(name, identity::GAMMA_ADJOINT, move || gamma_adjoint_check(family, &Basis::weight_capped(cap), &t)));
        }
        for &n_sites in &ns {
            for &n in &ps {
                let suffix = format!("N={n_sites} n={n} draw {i}: t={} x={}", show(&p.t), show(&p.x));
                let (x, t) = (p.x.clone(), p.t.clone());
                plan.jobs.push(job(format!("Lambda hermiticity {suffix}"), identity::LAMBDA_HERMITE, move || hermiticity_check(n_sites, n, &x, &t)));
                let (x, t) = (p.x.clone(), p.t.clone());
                plan.jobs.push(job(format!("q hermiticity {suffix}"), identity::Q_HERMITE, move || q_hermiticity_check(n_sites, n, &x, &t)));
            }
        }
    }
    Ok(())
}

fn gauge(spec: &SuiteSpec, plan: &mut Plan) -> Result<(), SuiteError> {
    let (ns, ps) = lattice_sizes(spec, 1..=3, 0..=3)?;
    let cap = spec.cap.unwrap_or(8);
    plan.param("N", format!("{ns:?}"));
    plan.param("n", format!("{ps:?}"));
    plan.param("cap", cap);
    for (i, p) in draws(spec, DrawStrategy::GenericT { vars: 0 }).into_iter().enumerate() {
        for &n_sites in &ns {
            for &n in &ps {
                let suffix = format!("N={n_sites} n={n} draw {i}: t={} x={}", show(&p.t), show(&p.x));
                let t = p.t.clone();
                plan.jobs.push(job(format!("Toda gauge {suffix}"), identity::GAUGE, move || toda_gauge_check(n_sites, n, &t, 1)));
                let (x, t) = (p.x.clone(), p.t.clone());
                plan.jobs.push(job(format!("three constructions {suffix}"), identity::CONSTRUCTIONS, move || {
                    let pi = periodic_transfer(n_sites, n, &x, &t)?.op;
                    let trace = trace_transfer(&LocalWeights::QBoson, n_sites, n, &x, &t)?.op;
                    let toda = toda_trace_transfer(n_sites, n, &x, &t)?.op;
                    Ok::<_, lattice_models::LatticeError>(CheckOutcome::all(
                        [operator_equality(&pi, &trace, "pi-expansion vs trace"), operator_equality(&pi, &toda, "pi-expansion vs Toda")],
                        "Lambda constructions",
                    ))
                }));
            }
            let t = p.t.clone();
            plan.jobs.push(job(format!("open gauge N={n_sites} draw {i}: t={}", show(&t)), identity::OPEN_GAUGE, move || {
                let basis = restricted(n_sites, cap);
                let boson = open_boson_transfer(n_sites, &basis, &t)?;
                let toda = open_toda_transfer(OpenKind::A, n_sites, &basis, &t)?;
                Ok::<_, lattice_models::LatticeError>(operator_equality(&boson, &toda, "open A_N"))
            }));
        }
    }
    Ok(())
}

/// The printed `Λ_2(z)` on basis `λ'_1 = 2, 1, 0`.
pub fn printed_lambda2(z: &Scalar, x: &Scalar, t: &Scalar) -> [[Scalar; 3]; 3] {
    let one = int(1);
    let diag = &one + z * z * x;
    let t2 = t * t;
    [
        [diag.clone(), (&one - t) * z, Scalar::zero()],
        [(&one - &t2) * z * x, diag.clone(), (&one - &t2) * z],
        [Scalar::zero(), (&one - t) * z * x, diag],
    ]
}

/// The printed `q_2(z)` on basis `λ'_1 = 2, 1, 0`.
pub fn printed_q2(z: &Scalar, x: &Scalar, t: &Scalar) -> [[Scalar; 3]; 3] {
    let one = int(1);
    let z2 = z * z;
    [
        [one.clone(), -z.clone(), z2.clone()],
        [-(&one + t) * z * x, &one + &z2 * x, -(&one + t) * z],
        [&z2 * x * x, -(z * x), one],
    ]
}

fn compare_printed(computed: &SparseMatrix, printed: &[[Scalar; 3]; 3], what: &str) -> CheckOutcome {
    if computed.dim() != 3 {
        return CheckOutcome::fail(format!("{what}: dimension {}", computed.dim()));
    }
    let mismatch = (0..3).flat_map(|r| (0..3).map(move |c| (r, c))).find_map(|(r, c)| {
        let got = computed.get(r, c);
        (got != printed[r][c]).then(|| format!("({r}, {c}): {got} != {}", printed[r][c]))
    });
    CheckOutcome::exact(mismatch, what)
}

fn paper_matrices(spec: &SuiteSpec, plan: &mut Plan) -> Result<(), SuiteError> {
    plan.param("N", 2);
    plan.param("n", 2);
    for (i, p) in draws(spec, DrawStrategy::GenericT { vars: 0 }).into_iter().enumerate() {
        let suffix = format!("draw {i}: z={} x={} t={}", show(&p.z), show(&p.x), show(&p.t));
        let (z, x, t) = (p.z.clone(), p.x.clone(), p.t.clone());
        plan.jobs.push(job(format!("Lambda_2 {suffix}"), identity::PRINTED_LAMBDA, move || {
            let printed = printed_lambda2(&z, &x, &t);
            let pi = periodic_transfer(2, 2, &x, &t)?.op.evaluate(&z);
            let toda = toda_trace_transfer(2, 2, &x, &t)?.op.evaluate(&z);
            Ok::<_, lattice_models::LatticeError>(CheckOutcome::all(
                [compare_printed(&pi, &printed, "pi-expansion"), compare_printed(&toda, &printed, "Toda trace")],
                "Lambda_2 entries",
            ))
        }));
        let (z, x, t) = (p.z.clone(), p.x.clone(), p.t.clone());
        plan.jobs.push(job(format!("q_2 {suffix}"), identity::PRINTED_Q, move || {
            let printed = printed_q2(&z, &x, &t);
            let closed = build_qmatrix(2, 2, &x, &t)?.op.evaluate(&z);
            let trace = build_qmatrix_trace(2, 2, &x, &t)?.op.evaluate(&z);
            Ok::<_, baxter_q::BaxterError>(CheckOutcome::all(
                [compare_printed(&closed, &printed, "closed form"), compare_printed(&trace, &printed, "LL trace")],
                "q_2 entries",
            ))
        }));
    }
    Ok(())
}
