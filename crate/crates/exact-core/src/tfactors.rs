use num_traits::One;

use crate::{CoreError, Scalar};

/// The t-Pochhammer symbol `(a)_m = (1-a)(1-at)...(1-at^{m-1})`.
pub fn tpoch(a: &Scalar, m: usize, t: &Scalar) -> Scalar {
    let mut acc = Scalar::one();
    let mut a_tj = a.clone();
    for _ in 0..m {
        acc *= Scalar::one() - &a_tj;
        a_tj *= t;
    }
    acc
}

/// The t-factorial `m!_t = (t)_m`.
pub fn tfactorial(m: usize, t: &Scalar) -> Scalar {
    tpoch(t, m, t)
}

/// The t-binomial `(t)_a / ((t)_b (t)_{a-b})`.
pub fn tbinom(a: i64, b: i64, t: &Scalar) -> Result<Scalar, CoreError> {
    if a < 0 || b < 0 || b > a {
        return Err(CoreError::InvalidBinomial { a, b });
    }
    Ok(gaussian_polynomial(a as usize, b as usize, t))
}

fn gaussian_polynomial(a: usize, b: usize, t: &Scalar) -> Scalar {
    // Pascal recurrence [a,b] = [a-1,b-1] + t^b [a-1,b].
    let mut row = vec![Scalar::one()];
    for n in 1..=a {
        let mut next = vec![Scalar::one(); n + 1];
        for k in 1..n {
            next[k] = row[k - 1].clone() + crate::pow(t, k as i64).unwrap() * &row[k];
        }
        row = next;
    }
    row[b].clone()
}
