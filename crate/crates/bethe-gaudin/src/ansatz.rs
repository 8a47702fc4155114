use itertools::Itertools;
use num_traits::{Num, ToPrimitive};

use exact_core::{tpoch, Scalar};

use crate::BetheError;

/// Field operations shared by exact rationals and complex doubles.
pub trait Field: Num + Clone {}

impl<T: Num + Clone> Field for T {}

/// Integer power, negative exponents allowed for nonzero bases.
pub fn ipow<T: Field>(x: &T, e: i64) -> Result<T, BetheError> {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e >= 0 {
        return Ok(p);
    }
    if p.is_zero() {
        return Err(BetheError::Singular("negative power of zero".into()));
    }
    Ok(T::one() / p)
}

/// `ξ(u) = (u + s) / (1 + u s)`.
pub fn xi<T: Field>(u: &T, s: &T) -> Result<T, BetheError> {
    let den = T::one() + u.clone() * s.clone();
    if den.is_zero() {
        return Err(BetheError::Pole);
    }
    Ok((u.clone() + s.clone()) / den)
}

/// `B(u) = ∏_{i<j} (u_i - t u_j) / (u_i - u_j)` for the given ordering.
pub fn amplitude<T: Field>(u: &[T], t: &T) -> Result<T, BetheError> {
    let mut b = T::one();
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            let den = u[i].clone() - u[j].clone();
            if den.is_zero() {
                return Err(BetheError::Coincident(i, j));
            }
            b = b * (u[i].clone() - t.clone() * u[j].clone()) / den;
        }
    }
    Ok(b)
}

/// `R^s_μ(U) = Σ_P B(u_P) ∏ ξ(u_{P_i})^{μ_i}`, divided by `∏ (1 + s u_k)` when `normalized`.
pub fn bethe_vector<T: Field>(mu: &[i64], u: &[T], t: &T, s: &T, normalized: bool) -> Result<T, BetheError> {
    let n = u.len();
    if mu.len() != n {
        return Err(BetheError::LengthMismatch { exponents: mu.len(), variables: n });
    }
    amplitude(u, t)?;
    let xis: Vec<T> = u.iter().map(|x| xi(x, s)).collect::<Result<_, _>>()?;
    let mut total = T::zero();
    for perm in (0..n).permutations(n) {
        let w: Vec<T> = perm.iter().map(|&a| u[a].clone()).collect();
        let mut term = amplitude(&w, t)?;
        for (i, &a) in perm.iter().enumerate() {
            term = term * ipow(&xis[a], mu[i])?;
        }
        total = total + term;
    }
    if normalized {
        for x in u {
            total = total / (T::one() + x.clone() * s.clone());
        }
    }
    Ok(total)
}

/// Particle positions in decreasing order for site occupations `m`.
pub fn positions(m: &[usize]) -> Vec<i64> {
    (0..m.len()).rev().flat_map(|k| std::iter::repeat_n(k as i64, m[k])).collect()
}

/// Multiplicity of each distinct value in a sequence.
pub(crate) fn multiplicities(mu: &[i64]) -> Vec<usize> {
    mu.iter().copied().dedup_with_count().map(|(c, _)| c).collect()
}

/// `⟨μ|μ⟩_s = ∏ (t;t)_m / (s²;t)_m` over the multiplicities of a sorted `μ`.
pub fn spin_norm(mu: &[i64], t: &Scalar, s: &Scalar) -> Result<Scalar, BetheError> {
    let s2 = s * s;
    let mut norm = Scalar::from_integer(1.into());
    for m in multiplicities(mu) {
        let den = tpoch(&s2, m, t);
        if num_traits::Zero::is_zero(&den) {
            return Err(BetheError::Singular(format!("(s^2; t)_{m} vanishes")));
        }
        norm *= tpoch(t, m, t) / den;
    }
    Ok(norm)
}

pub(crate) fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
