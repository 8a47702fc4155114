use itertools::Itertools;
use num_traits::Zero;

use exact_core::linalg::determinant;
use exact_core::{int, pow, tfactorial, tpoch, CheckOutcome, Scalar};
use partition_space::partitions_of;

use crate::ansatz::to_f64;
use crate::{amplitude, bethe_vector, spin_norm, xi, BetheError};

pub const MAX_GAUDIN_SIZE: usize = 3;

/// Truncated scalar product with its geometric tail bound.
#[derive(Debug, Clone, PartialEq)]
pub struct GaudinSum {
    pub value: Scalar,
    pub tail_bound: f64,
    pub terms: usize,
}

fn check_size(u: &[Scalar], v: &[Scalar]) -> Result<usize, BetheError> {
    if u.len() != v.len() {
        return Err(BetheError::LengthMismatch { exponents: u.len(), variables: v.len() });
    }
    if u.len() > MAX_GAUDIN_SIZE {
        return Err(BetheError::TooLarge(format!("n = {}", u.len())));
    }
    Ok(u.len())
}

fn max_amplitude(u: &[Scalar], t: &Scalar) -> Result<f64, BetheError> {
    let n = u.len();
    let mut best = 0.0f64;
    for p in (0..n).permutations(n) {
        let w: Vec<Scalar> = p.iter().map(|&a| u[a].clone()).collect();
        best = best.max(to_f64(&amplitude(&w, t)?).abs());
    }
    Ok(best)
}

fn max_xi(u: &[Scalar], s: &Scalar) -> Result<f64, BetheError> {
    u.iter().map(|x| xi(x, s).map(|v| to_f64(&v).abs())).try_fold(0.0f64, |acc, v| v.map(|v| acc.max(v)))
}

fn spin_prefactor(u: &[Scalar], s: &Scalar) -> f64 {
    u.iter().map(|x| to_f64(&(int(1) + x * s)).abs()).product()
}

/// Lower bound for `|⟨μ|μ⟩_s|` over all `μ` with `n` parts.
fn norm_floor(n: usize, t: &Scalar, s: &Scalar) -> f64 {
    let s2 = s * s;
    let group = |m: usize| to_f64(&(tpoch(t, m, t) / tpoch(&s2, m, t))).abs();
    partitions_of(n, None, None)
        .iter()
        .map(|p| p.parts().iter().map(|&m| group(m)).product::<f64>())
        .fold(f64::INFINITY, f64::min)
}

/// `Σ_μ R^s_μ(Ǔ) R^s_μ(V) / ⟨μ|μ⟩_s` over weakly decreasing `truncation ≥ μ_1 ≥ ... ≥ μ_n ≥ 0`.
pub fn gaudin_sum(u: &[Scalar], v: &[Scalar], t: &Scalar, s: &Scalar, truncation: usize) -> Result<GaudinSum, BetheError> {
    let n = check_size(u, v)?;
    if n == 0 {
        return Ok(GaudinSum { value: int(1), tail_bound: 0.0, terms: 1 });
    }
    let rho = max_xi(u, s)? * max_xi(v, s)?;
    if rho.is_nan() || rho >= 1.0 {
        return Err(BetheError::Divergent(format!("max |ξ(ǔ)| max |ξ(v)| = {rho}")));
    }
    let factorial: f64 = (1..=n).map(|k| k as f64).product();
    let constant = factorial * factorial * max_amplitude(u, t)? * max_amplitude(v, t)?
        / (spin_prefactor(u, s) * spin_prefactor(v, s) * norm_floor(n, t, s));
    let tail_bound = constant * rho.powi(truncation as i32 + 1) / (1.0 - rho).powi(n as i32);
    let mut value = Scalar::zero();
    let mut terms = 0;
    for combo in (0..=truncation as i64).combinations_with_replacement(n) {
        let mu: Vec<i64> = combo.into_iter().rev().collect();
        let left = bethe_vector(&mu, u, t, s, true)?;
        let right = bethe_vector(&mu, v, t, s, true)?;
        value += left * right / spin_norm(&mu, t, s)?;
        terms += 1;
    }
    Ok(GaudinSum { value, tail_bound, terms })
}

fn matrix(u: &[Scalar], v: &[Scalar], entry: impl Fn(&Scalar) -> Scalar) -> Vec<Vec<Scalar>> {
    u.iter().map(|a| v.iter().map(|b| entry(&(a * b))).collect()).collect()
}

/// `t^{n(n-1)/2} / (1-t)^n · D_n / δ_n` with the Gaudin and Cauchy determinants.
pub fn gaudin_det(u: &[Scalar], v: &[Scalar], t: &Scalar) -> Result<Scalar, BetheError> {
    let n = check_size(u, v)?;
    for a in u {
        for b in v {
            let p = a * b;
            if (int(1) - &p).is_zero() || (int(1) - t * &p).is_zero() {
                return Err(BetheError::Singular(format!("denominator at ǔ v = {p}")));
            }
        }
    }
    if (int(1) - t).is_zero() {
        return Err(BetheError::Singular("t = 1".into()));
    }
    let gaudin = determinant(&matrix(u, v, |p| int(1) / ((int(1) - p) * (int(1) - t * p))))?;
    let cauchy = determinant(&matrix(u, v, |p| int(1) / (int(1) - t * p)))?;
    if cauchy.is_zero() {
        return Err(BetheError::Singular("Cauchy determinant vanishes".into()));
    }
    let n = n as i64;
    Ok(pow(t, n * (n - 1) / 2)? / pow(&(int(1) - t), n)? * gaudin / cauchy)
}

fn omega_block(u: &[Scalar], v: &[Scalar], t: &Scalar) -> Result<Scalar, BetheError> {
    let mut f = int(1);
    for a in u {
        for b in v {
            let den = int(1) - a * b;
            if den.is_zero() {
                return Err(BetheError::Singular("1 - ǔ v vanishes".into()));
            }
            f *= (int(1) - t * a * b) / den;
        }
    }
    Ok(f)
}

/// Coefficients of `∏_{k=1..n} (1 - t^k T)` in `T`.
pub fn shift_polynomial(n: usize, t: &Scalar) -> Vec<Scalar> {
    let mut c = vec![int(1)];
    for k in 1..=n {
        let tk = pow(t, k as i64).expect("non-negative power");
        let mut next = vec![Scalar::zero(); c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            next[i] += ci;
            next[i + 1] -= &tk * ci;
        }
        c = next;
    }
    c
}

/// The Hecke symmetrization of `Ω((1-t) V Ǔ) (1 - t τ0) ... (1 - t^n τ0)` against `t^{n(n-1)/2} (1-t)^n D_n/δ_n`.
///
/// `τ0^k` sets the last `k` entries of the ordered alphabet to zero.
pub fn lascoux_reduction_check(u: &[Scalar], v: &[Scalar], t: &Scalar) -> Result<CheckOutcome, BetheError> {
    let n = check_size(u, v)?;
    amplitude(u, t)?;
    let c = shift_polynomial(n, t);
    let mut total = Scalar::zero();
    for p in (0..n).permutations(n) {
        let w: Vec<Scalar> = p.iter().map(|&a| u[a].clone()).collect();
        let mut shifted = Scalar::zero();
        for (k, ck) in c.iter().enumerate() {
            shifted += ck * omega_block(&w[..n - k], v, t)?;
        }
        total += shifted * amplitude(&w, t)?;
    }
    let norm = tfactorial(n, t);
    if norm.is_zero() {
        return Err(BetheError::Singular("(t; t)_n vanishes".into()));
    }
    let lhs = total * pow(&(int(1) - t), n as i64)? / norm;
    let rhs = gaudin_det(u, v, t)? * pow(&(int(1) - t), 2 * n as i64)?;
    let mismatch = (lhs != rhs).then(|| format!("{lhs} != {rhs}"));
    Ok(CheckOutcome::exact(mismatch, format!("shift reduction at n = {n}")))
}

/// Largest deviation allowed between a truncated sum and its limit.
pub fn sum_tolerance(sum: &GaudinSum) -> f64 {
    sum.tail_bound.max(f64::EPSILON)
}

/// Deviation of the truncated sum from the determinant, as a check.
pub fn gaudin_agreement(sum: &GaudinSum, det: &Scalar) -> CheckOutcome {
    let deviation = to_f64(&(&sum.value - det)).abs();
    CheckOutcome::within(deviation, sum_tolerance(sum), format!("{} terms, tail bound {:.3e}", sum.terms, sum.tail_bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::frac;

    #[test]
    fn one_by_one_determinant() {
        let (u, v, t) = (frac(1, 3), frac(1, 2), frac(1, 4));
        let expected = int(1) / ((int(1) - &t) * (int(1) - &u * &v));
        assert_eq!(gaudin_det(&[u], &[v], &t).unwrap(), expected);
        assert_eq!(gaudin_det(&[], &[], &t).unwrap(), int(1));
    }

    #[test]
    fn shift_polynomial_small() {
        let t = frac(1, 2);
        assert_eq!(shift_polynomial(1, &t), vec![int(1), frac(-1, 2)]);
        assert_eq!(shift_polynomial(2, &t), vec![int(1), frac(-3, 4), frac(1, 8)]);
        assert_eq!(shift_polynomial(0, &t), vec![int(1)]);
    }
}
