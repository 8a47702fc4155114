use std::collections::BTreeMap;

use itertools::Itertools;
use num_complex::Complex64;
use num_traits::{One, Zero};

use exact_core::{int, pow, CheckOutcome, Scalar};
use lattice_models::{to_sites, trace_transfer, LocalWeights};

use crate::ansatz::to_f64;
use crate::{amplitude, bethe_vector, ipow, positions, xi, BetheError, BetheSystem, BoltzmannWeights};

pub const PERIODIC_TOLERANCE: f64 = 1e-8;

fn complex(x: &Scalar) -> Complex64 {
    Complex64::new(to_f64(x), 0.0)
}

/// `ω1^N ∏ (1 - z t u)/(1 - z u) + X ω3^N t^M ∏ (1 - z u/t)/(1 - z u)`.
pub fn periodic_eigenvalue(system: &BetheSystem, z: Complex64) -> Complex64 {
    let p = &system.params;
    let (t, s, x) = (complex(&p.t), complex(&p.s), complex(&p.x));
    let one = Complex64::one();
    let n = p.sites as i32;
    let w1 = one + z * s;
    let w3 = z + s;
    let first: Complex64 = system.roots.iter().map(|u| (one - z * t * u) / (one - z * u)).product();
    let second: Complex64 = system.roots.iter().map(|u| (one - z * u / t) / (one - z * u)).product();
    w1.powi(n) * first + x * w3.powi(n) * t.powi(system.roots.len() as i32) * second
}

/// Left eigenvector check `R Λ^s(z) = Λ̃(z) R` on the periodic chain, with `R` scaled to unit sup norm.
pub fn periodic_eigen_check(system: &BetheSystem, z: Complex64) -> Result<CheckOutcome, BetheError> {
    let p = &system.params;
    let lattice = trace_transfer(&LocalWeights::SpinS(p.s.clone()), p.sites, p.particles, &p.x, &p.t)?;
    let dim = lattice.basis.len();
    let mut dense = vec![vec![Complex64::zero(); dim]; dim];
    for (degree, block) in lattice.op.blocks() {
        let zd = z.powi(degree as i32);
        for (row, col, value) in block.entries() {
            dense[row][col] += zd * to_f64(value);
        }
    }
    let (t, s) = (complex(&p.t), complex(&p.s));
    let mut components: Vec<Complex64> = lattice
        .basis
        .states()
        .iter()
        .map(|v| bethe_vector(&positions(&to_sites(v)), &system.roots, &t, &s, false))
        .collect::<Result<_, _>>()?;
    let scale = components.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 || !scale.is_finite() {
        return Ok(CheckOutcome::fail("Bethe vector vanishes"));
    }
    for c in &mut components {
        *c /= scale;
    }
    let eigenvalue = periodic_eigenvalue(system, z);
    let mut worst = (0.0f64, 0usize);
    for col in 0..dim {
        let image: Complex64 = (0..dim).map(|row| components[row] * dense[row][col]).sum();
        let dev = (image - eigenvalue * components[col]).norm();
        if dev.is_nan() || dev > worst.0 {
            worst = (dev, col);
        }
    }
    let detail = format!(
        "N = {}, M = {}, worst component {:?}",
        p.sites,
        p.particles,
        lattice.basis.state(worst.1).as_slice()
    );
    Ok(CheckOutcome::within(worst.0, PERIODIC_TOLERANCE, detail))
}

fn occupation(mu: &[i64]) -> BTreeMap<i64, usize> {
    mu.iter().copied().counts().into_iter().collect()
}

/// Weight of the row transition `μ → λ` on the line, built from local weights `(a, b, m)`.
pub fn path_weight(mu: &[i64], lam: &[i64], local: impl Fn(usize, usize, usize) -> Scalar) -> Scalar {
    if mu.len() != lam.len() {
        return Scalar::zero();
    }
    if mu.is_empty() {
        return Scalar::one();
    }
    let (om, ol) = (occupation(mu), occupation(lam));
    let lo = *om.keys().chain(ol.keys()).min().expect("nonempty");
    let hi = *om.keys().chain(ol.keys()).max().expect("nonempty");
    let mut a = 0i64;
    let mut total = Scalar::one();
    for k in lo..=hi {
        let m = om.get(&k).copied().unwrap_or(0);
        let b = a + m as i64 - ol.get(&k).copied().unwrap_or(0) as i64;
        if !(0..=1).contains(&b) {
            return Scalar::zero();
        }
        total *= local(a as usize, b as usize, m);
        if total.is_zero() {
            return total;
        }
        a = b;
    }
    if a == 0 {
        total
    } else {
        Scalar::zero()
    }
}

/// Spin-s line weights divided by `ω1` per site.
pub fn spin_line_weight(mu: &[i64], lam: &[i64], z: &Scalar, s: &Scalar, t: &Scalar) -> Result<Scalar, BetheError> {
    let w1 = int(1) + z * s;
    if w1.is_zero() {
        return Err(BetheError::Pole);
    }
    let local = |a, b, m: usize| {
        let tm = pow(t, m as i64).expect("non-negative power");
        let raw = match (a, b) {
            (0, 0) => int(1) + z * s * &tm,
            (0, 1) => z * (int(1) - &tm),
            (1, 0) => int(1) - s * s * &tm,
            _ => z + s * &tm,
        };
        raw / &w1
    };
    Ok(path_weight(mu, lam, local))
}

fn check_decreasing(mu: &[i64]) -> Result<(), BetheError> {
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(BetheError::Singular(format!("{mu:?} is not weakly decreasing")));
    }
    Ok(())
}

/// Interlacing choices `λ_i ∈ [μ_i, μ_{i-1}]` for `i ≥ 2`.
fn lower_rows(mu: &[i64]) -> Vec<Vec<i64>> {
    (1..mu.len()).map(|i| (mu[i]..=mu[i - 1]).collect::<Vec<_>>()).multi_cartesian_product().collect()
}

fn eigen_factor(u: &[Scalar], z: &Scalar, t: &Scalar) -> Result<Scalar, BetheError> {
    let mut f = int(1);
    for x in u {
        let den = int(1) - z * x;
        if den.is_zero() {
            return Err(BetheError::Singular("1 - z u vanishes".into()));
        }
        f *= (int(1) - z * t * x) / den;
    }
    Ok(f)
}

/// `Σ_λ R_λ A_{λμ}(z) = ∏ (1 - z t u)/(1 - z u) R_μ` on the line, exact in rationals.
///
/// The unbounded range of `λ_1` is a geometric series in `ξ ω3/ω1` per permutation and is summed in closed form.
pub fn interior_eigen_check(mu: &[i64], u: &[Scalar], z: &Scalar, s: &Scalar, t: &Scalar) -> Result<CheckOutcome, BetheError> {
    check_decreasing(mu)?;
    let n = u.len();
    if mu.len() != n {
        return Err(BetheError::LengthMismatch { exponents: mu.len(), variables: n });
    }
    let rhs = eigen_factor(u, z, t)? * bethe_vector(mu, u, t, s, false)?;
    if n == 0 {
        let mismatch = (rhs != int(1)).then(|| format!("{rhs} != 1"));
        return Ok(CheckOutcome::exact(mismatch, "empty row"));
    }
    let weights = BoltzmannWeights::new(z, s, t);
    let ratio = &weights.omega[3] / &weights.omega[1];
    let xis: Vec<Scalar> = u.iter().map(|x| xi(x, s)).collect::<Result<_, _>>()?;
    let perms: Vec<(Vec<usize>, Scalar)> = (0..n)
        .permutations(n)
        .map(|p| {
            let w: Vec<Scalar> = p.iter().map(|&a| u[a].clone()).collect();
            amplitude(&w, t).map(|b| (p, b))
        })
        .collect::<Result<_, _>>()?;
    let mut lhs = Scalar::zero();
    for rest in lower_rows(mu) {
        let with_head = |head: i64| std::iter::once(head).chain(rest.iter().copied()).collect::<Vec<_>>();
        let stay = spin_line_weight(mu, &with_head(mu[0]), z, s, t)?;
        let hop = spin_line_weight(mu, &with_head(mu[0] + 1), z, s, t)?;
        if stay.is_zero() && hop.is_zero() {
            continue;
        }
        for (p, b) in &perms {
            let head = &xis[p[0]];
            let den = int(1) - head * &ratio;
            if den.is_zero() {
                return Err(BetheError::Divergent("ξ ω3 = ω1".into()));
            }
            let mut term = &stay * ipow(head, mu[0])? + &hop * ipow(head, mu[0] + 1)? / den;
            for (i, &lam) in rest.iter().enumerate() {
                term *= ipow(&xis[p[i + 1]], lam)?;
            }
            lhs += term * b;
        }
    }
    let mismatch = (lhs != rhs).then(|| format!("{lhs} != {rhs}"));
    Ok(CheckOutcome::exact(mismatch, format!("interior row at μ = {mu:?}")))
}

/// Power-series coefficients of `∏ (1 - z t u)/(1 - z u)` up to `z^max_degree`.
pub fn eigen_series(u: &[Scalar], t: &Scalar, max_degree: usize) -> Vec<Scalar> {
    let mut series = vec![Scalar::zero(); max_degree + 1];
    series[0] = int(1);
    for x in u {
        let mut next = vec![Scalar::zero(); max_degree + 1];
        for (d, c) in series.iter().enumerate() {
            let mut power = int(1);
            for k in 0..=max_degree - d {
                next[d + k] += c * &power;
                power *= x;
            }
        }
        let shifted: Vec<Scalar> = (0..=max_degree)
            .map(|d| if d == 0 { next[0].clone() } else { &next[d] - t * x * &next[d - 1] })
            .collect();
        series = shifted;
    }
    series
}

/// Degree by degree in a formal `z` at `s = 0`: each power of `z` is a finite sum over `λ`.
pub fn interior_graded_check(mu: &[i64], u: &[Scalar], t: &Scalar, max_degree: usize) -> Result<CheckOutcome, BetheError> {
    check_decreasing(mu)?;
    let n = u.len();
    if mu.len() != n {
        return Err(BetheError::LengthMismatch { exponents: mu.len(), variables: n });
    }
    let zero = Scalar::zero();
    let series = eigen_series(u, t, max_degree);
    let r_mu = bethe_vector(mu, u, t, &zero, false)?;
    let mut lhs = vec![Scalar::zero(); max_degree + 1];
    if n == 0 {
        lhs[0] = int(1);
    }
    let base: i64 = mu.iter().sum();
    let local = |a, b, m: usize| match (a, b) {
        (0, 1) => int(1) - pow(t, m as i64).expect("non-negative power"),
        _ => int(1),
    };
    if n > 0 {
        for head in mu[0]..=mu[0] + max_degree as i64 {
            for rest in lower_rows(mu) {
                let lam: Vec<i64> = std::iter::once(head).chain(rest).collect();
                let degree = (lam.iter().sum::<i64>() - base) as usize;
                if degree > max_degree {
                    continue;
                }
                let w = path_weight(mu, &lam, local);
                if w.is_zero() {
                    continue;
                }
                lhs[degree] += w * bethe_vector(&lam, u, t, &zero, false)?;
            }
        }
    }
    let mismatch = (0..=max_degree).find_map(|d| {
        let rhs = &series[d] * &r_mu;
        (lhs[d] != rhs).then(|| format!("z^{d}: {} != {rhs}", lhs[d]))
    });
    Ok(CheckOutcome::exact(mismatch, format!("graded interior row at μ = {mu:?} to z^{max_degree}")))
}
