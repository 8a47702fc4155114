use exact_core::{int, pow, CheckOutcome, Scalar};
use num_traits::Zero;

use crate::{amplitude, xi, BetheError};

/// Spin-s vertex weights at spectral parameter `z`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoltzmannWeights {
    /// `ω_0, ..., ω_6`.
    pub omega: [Scalar; 7],
}

impl BoltzmannWeights {
    pub fn new(z: &Scalar, s: &Scalar, t: &Scalar) -> Self {
        let one = int(1);
        let s2 = s * s;
        Self {
            omega: [
                &one - &s2 * t,
                &one + z * s,
                z + t * s,
                z + s,
                &one + z * t * s,
                z * (&one - t),
                &one - &s2,
            ],
        }
    }

    fn w(&self, i: usize) -> &Scalar {
        &self.omega[i]
    }

    /// `D(m, n)` for `m ≤ n`.
    pub fn d(&self, m: i64, n: i64) -> Result<Scalar, BetheError> {
        if m < n {
            Ok(pow(self.w(3), n - m - 1)? * self.w(6))
        } else {
            nonzero(self.w(5), "ω5")?;
            Ok(self.w(4) / self.w(5))
        }
    }

    /// `D̄(n, m)` for `n ≤ m`.
    pub fn d_bar(&self, n: i64, m: i64) -> Result<Scalar, BetheError> {
        if n < m {
            Ok(pow(self.w(1), m - n - 1)? * self.w(5))
        } else {
            nonzero(self.w(6), "ω6")?;
            Ok(self.w(2) / self.w(6))
        }
    }

    fn geometric_den(&self, xi: &Scalar) -> Result<Scalar, BetheError> {
        let den = self.w(1) - xi * self.w(3);
        nonzero(&den, "ω1 - ξ ω3")?;
        Ok(den)
    }

    pub fn hat_x(&self, xi: &Scalar) -> Result<Scalar, BetheError> {
        Ok(xi * self.w(5) * self.w(6) / self.geometric_den(xi)? + self.w(4))
    }

    pub fn hat_y(&self, xi: &Scalar) -> Result<Scalar, BetheError> {
        Ok(self.w(2) - self.w(5) * self.w(6) / self.geometric_den(xi)?)
    }

    /// Two-body coefficient `C(a, b) = Ŷ(a) X̂(b) - ω2 ω4 + ω0 ω5`.
    pub fn two_body(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, BetheError> {
        Ok(self.hat_y(a)? * self.hat_x(b)? - self.w(2) * self.w(4) + self.w(0) * self.w(5))
    }
}

fn nonzero(x: &Scalar, name: &str) -> Result<(), BetheError> {
    if x.is_zero() {
        return Err(BetheError::Singular(format!("{name} vanishes")));
    }
    Ok(())
}

/// `Σ_{m2≤n≤m1} D(m2,n) D̄(n,m1) ξ^n = X̂ ω1^{m1-m2-1} ξ^{m2} + Ŷ ω3^{m1-m2-1} ξ^{m1}` for `m2 < m1`.
pub fn geometric_sum_check(weights: &BoltzmannWeights, xi: &Scalar, m2: i64, m1: i64) -> Result<CheckOutcome, BetheError> {
    if m2 >= m1 {
        return Err(BetheError::Singular(format!("need m2 < m1, got {m2}, {m1}")));
    }
    let mut lhs = Scalar::zero();
    for n in m2..=m1 {
        lhs += weights.d(m2, n)? * weights.d_bar(n, m1)? * pow(xi, n)?;
    }
    let gap = m1 - m2 - 1;
    let rhs = weights.hat_x(xi)? * pow(weights.w(1), gap)? * pow(xi, m2)?
        + weights.hat_y(xi)? * pow(weights.w(3), gap)? * pow(xi, m1)?;
    let mismatch = (lhs != rhs).then(|| format!("{lhs} != {rhs}"));
    Ok(CheckOutcome::exact(mismatch, format!("D D̄ sum over [{m2}, {m1}]")))
}

/// `B(u1,u2) C(ξ2,ξ1) + B(u2,u1) C(ξ1,ξ2) = 0`.
pub fn two_body_check(z: &Scalar, s: &Scalar, t: &Scalar, u1: &Scalar, u2: &Scalar) -> Result<CheckOutcome, BetheError> {
    let weights = BoltzmannWeights::new(z, s, t);
    let (x1, x2) = (xi(u1, s)?, xi(u2, s)?);
    let b12 = amplitude(&[u1.clone(), u2.clone()], t)?;
    let b21 = amplitude(&[u2.clone(), u1.clone()], t)?;
    let total = b12 * weights.two_body(&x2, &x1)? + b21 * weights.two_body(&x1, &x2)?;
    let mismatch = (!total.is_zero()).then(|| format!("sum = {total}"));
    Ok(CheckOutcome::exact(mismatch, "two-body cancellation"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::frac;

    #[test]
    fn weights_at_zero_spin() {
        let w = BoltzmannWeights::new(&frac(1, 2), &int(0), &frac(1, 3));
        assert_eq!(w.omega[1], int(1));
        assert_eq!(w.omega[3], frac(1, 2));
        assert_eq!(w.omega[5], frac(1, 3));
        assert_eq!(w.omega[6], int(1));
    }

    #[test]
    fn geometric_sums() {
        let w = BoltzmannWeights::new(&frac(3, 5), &frac(1, 6), &frac(2, 7));
        for (m2, m1) in [(0, 1), (0, 3), (1, 4), (-2, 2)] {
            assert!(geometric_sum_check(&w, &frac(1, 3), m2, m1).unwrap().passed);
        }
        assert!(geometric_sum_check(&w, &frac(1, 3), 2, 2).is_err());
    }
}
