use exact_core::{int, pow, tfactorial, Scalar};
use itertools::Itertools;
use num_traits::Zero;
use partition_space::Partition;

use crate::{Alphabet, HlError};

/// Largest alphabet accepted by the permutation sum.
pub const MAX_VARIABLES: usize = 7;

/// Which normalization of the Hall-Littlewood function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HlFamily {
    P,
    Q,
}

/// The permutation sum `R_mu`; `mu` may be any integer sequence of the alphabet's length.
pub fn hl_r(mu: &[i64], vars: &Alphabet, t: &Scalar) -> Result<Scalar, HlError> {
    let values = vars.values();
    let n = values.len();
    if mu.len() != n {
        return Err(HlError::LengthMismatch { exponents: mu.len(), variables: n });
    }
    if n > MAX_VARIABLES {
        return Err(HlError::TooManyVariables(n));
    }
    let mut cross = vec![vec![Scalar::zero(); n]; n];
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let diff = &values[a] - &values[b];
            if diff.is_zero() {
                return Err(HlError::CoincidentVariables(a.min(b), a.max(b)));
            }
            cross[a][b] = (&values[a] - t * &values[b]) / diff;
        }
    }
    let mut powers = vec![vec![Scalar::zero(); n]; n];
    for (a, value) in values.iter().enumerate() {
        for (i, &e) in mu.iter().enumerate() {
            powers[a][i] = pow(value, e)?;
        }
    }
    let mut total = Scalar::zero();
    for perm in (0..n).permutations(n) {
        let mut term = int(1);
        for (i, &a) in perm.iter().enumerate() {
            term *= &powers[a][i];
        }
        if term.is_zero() {
            continue;
        }
        for i in 0..n {
            for j in i + 1..n {
                term *= &cross[perm[i]][perm[j]];
            }
        }
        total += term;
    }
    Ok(total)
}

/// `P_lambda` or `Q_lambda` in the given alphabet; zero when the alphabet is too short.
pub fn hl_pq(family: HlFamily, lambda: &Partition, vars: &Alphabet, t: &Scalar) -> Result<Scalar, HlError> {
    let n = vars.len();
    if lambda.len() > n {
        return Ok(Scalar::zero());
    }
    let m0 = n - lambda.len();
    let mu: Vec<i64> = (0..n).map(|i| lambda.part(i) as i64).collect();
    let q = pow(&(int(1) - t), n as i64)? / tfactorial(m0, t) * hl_r(&mu, vars, t)?;
    Ok(match family {
        HlFamily::Q => q,
        HlFamily::P => q / lambda.state_norm(t),
    })
}
