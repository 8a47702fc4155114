use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use exact_core::Scalar;

use crate::ansatz::to_f64;
use crate::{xi, BetheError};

pub const MAX_SITES: usize = 6;
pub const MAX_PARTICLES: usize = 3;

const JACOBIAN_STEP: f64 = 1e-7;
const DISTINCT_TOLERANCE: f64 = 1e-6;
const DEDUP_TOLERANCE: f64 = 1e-8;

/// Chain parameters shared by the solver and the eigen-checks.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainParams {
    pub sites: usize,
    pub particles: usize,
    pub t: Scalar,
    pub s: Scalar,
    pub x: Scalar,
}

/// One solution of the Bethe equations.
#[derive(Debug, Clone, PartialEq)]
pub struct BetheSystem {
    pub params: ChainParams,
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
}

impl BetheSystem {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub seeds: usize,
    pub rng_seed: u64,
    pub max_iterations: usize,
    pub tolerance: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { seeds: 20, rng_seed: 0, max_iterations: 100, tolerance: 1e-10 }
    }
}

/// Distinct solutions plus the number of seeds that did not converge.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub solutions: Vec<BetheSystem>,
    pub failed_seeds: usize,
}

/// `X ξ(u_k)^{-N} - ∏_{l≠k} (u_k - t u_l)/(t u_k - u_l)` for each `k`.
pub fn bethe_residuals(u: &[Complex64], sites: usize, x: Complex64, t: Complex64, s: Complex64) -> Vec<Complex64> {
    (0..u.len())
        .map(|k| {
            let lhs = match xi(&u[k], &s) {
                Ok(v) => x * v.powi(-(sites as i32)),
                Err(_) => Complex64::new(f64::NAN, f64::NAN),
            };
            let rhs = (0..u.len())
                .filter(|&l| l != k)
                .fold(Complex64::new(1.0, 0.0), |acc, l| acc * (u[k] - t * u[l]) / (t * u[k] - u[l]));
            lhs - rhs
        })
        .collect()
}

/// Pole-free form `X (1 + u_k s)^N ∏ (t u_k - u_l) - (u_k + s)^N ∏ (u_k - t u_l)` used by the iteration.
fn cleared_residuals(u: &[Complex64], sites: usize, x: Complex64, t: Complex64, s: Complex64) -> Vec<Complex64> {
    let n = sites as i32;
    let one = Complex64::new(1.0, 0.0);
    (0..u.len())
        .map(|k| {
            let others = (0..u.len()).filter(|&l| l != k);
            let den: Complex64 = others.clone().map(|l| t * u[k] - u[l]).product();
            let num: Complex64 = others.map(|l| u[k] - t * u[l]).product();
            x * (one + u[k] * s).powi(n) * den - (u[k] + s).powi(n) * num
        })
        .collect()
}

fn sup(v: &[Complex64]) -> f64 {
    v.iter().map(|c| if c.is_finite() { c.norm() } else { f64::INFINITY }).fold(0.0, f64::max)
}

fn newton(mut u: Vec<Complex64>, sites: usize, x: Complex64, t: Complex64, s: Complex64, iterations: usize) -> Vec<Complex64> {
    let m = u.len();
    for _ in 0..iterations {
        let f = cleared_residuals(&u, sites, x, t, s);
        let size = sup(&f);
        if !size.is_finite() || size < 1e-14 {
            break;
        }
        let mut jac = DMatrix::<Complex64>::zeros(m, m);
        for j in 0..m {
            let mut shifted = u.clone();
            shifted[j] += JACOBIAN_STEP;
            let g = cleared_residuals(&shifted, sites, x, t, s);
            for i in 0..m {
                jac[(i, j)] = (g[i] - f[i]) / JACOBIAN_STEP;
            }
        }
        let Some(step) = jac.lu().solve(&DVector::from_vec(f)) else { break };
        for (ui, di) in u.iter_mut().zip(step.iter()) {
            *ui -= di;
        }
    }
    u
}

fn canonical(mut roots: Vec<Complex64>) -> Vec<Complex64> {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    roots
}

fn same_set(a: &[Complex64], b: &[Complex64]) -> bool {
    let mut unused: Vec<bool> = vec![true; b.len()];
    a.iter().all(|x| {
        let hit = b.iter().enumerate().find(|(j, y)| unused[*j] && (x - *y).norm() < DEDUP_TOLERANCE);
        match hit {
            Some((j, _)) => {
                unused[j] = false;
                true
            }
            None => false,
        }
    })
}

fn complex(x: &Scalar) -> Complex64 {
    Complex64::new(to_f64(x), 0.0)
}

/// Newton iteration from random complex seeds; keeps distinct converged solutions up to permutation.
pub fn bethe_solve(params: &ChainParams, config: &SolverConfig) -> Result<SolveReport, BetheError> {
    if params.sites == 0 || params.sites > MAX_SITES || params.particles > MAX_PARTICLES {
        return Err(BetheError::TooLarge(format!("N = {}, M = {}", params.sites, params.particles)));
    }
    if params.particles == 0 {
        let empty = BetheSystem { params: params.clone(), roots: vec![], residuals: vec![] };
        return Ok(SolveReport { solutions: vec![empty], failed_seeds: 0 });
    }
    let (x, t, s) = (complex(&params.x), complex(&params.t), complex(&params.s));
    let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
    let mut solutions: Vec<BetheSystem> = Vec::new();
    let mut failed_seeds = 0;
    for _ in 0..config.seeds {
        let seed: Vec<Complex64> =
            (0..params.particles).map(|_| Complex64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5))).collect();
        let roots = newton(seed, params.sites, x, t, s, config.max_iterations);
        let residuals: Vec<f64> = bethe_residuals(&roots, params.sites, x, t, s).iter().map(|r| r.norm()).collect();
        let converged = residuals.iter().all(|r| r.is_finite() && *r < config.tolerance);
        let distinct = (0..roots.len()).all(|i| (i + 1..roots.len()).all(|j| (roots[i] - roots[j]).norm() > DISTINCT_TOLERANCE));
        if !converged || !distinct {
            failed_seeds += 1;
            continue;
        }
        let roots = canonical(roots);
        if solutions.iter().any(|known| same_set(&known.roots, &roots)) {
            continue;
        }
        let residuals = bethe_residuals(&roots, params.sites, x, t, s).iter().map(|r| r.norm()).collect();
        solutions.push(BetheSystem { params: params.clone(), roots, residuals });
    }
    Ok(SolveReport { solutions, failed_seeds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{frac, int};

    #[test]
    fn one_particle_roots() {
        let params = ChainParams { sites: 3, particles: 1, t: frac(1, 3), s: int(0), x: int(2) };
        let report = bethe_solve(&params, &SolverConfig::default()).unwrap();
        assert!(!report.solutions.is_empty());
        for sol in &report.solutions {
            let u = sol.roots[0];
            assert!((u.powi(3) - Complex64::new(2.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn empty_and_oversized() {
        let params = ChainParams { sites: 3, particles: 0, t: frac(1, 3), s: int(0), x: int(1) };
        let report = bethe_solve(&params, &SolverConfig::default()).unwrap();
        assert_eq!(report.solutions.len(), 1);
        assert!(report.solutions[0].roots.is_empty());
        let big = ChainParams { sites: 7, ..params };
        assert!(matches!(bethe_solve(&big, &SolverConfig::default()), Err(BetheError::TooLarge(_))));
    }
}
