use std::collections::HashMap;

use exact_core::{pow, Scalar};
use num_traits::{One, Zero};
use partition_space::{strips_below, Partition};

use crate::{pieri_coeff, Alphabet, HlError, PieriKind};

/// Which tableau sum to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkewKind {
    /// Horizontal strips weighted by `psi`: the skew `P_{lambda/mu}`.
    P,
    /// Vertical strips weighted by `phi'`: the dual `Q^omega_{lambda'/mu'}`.
    QOmega,
}

/// Tableau sum over chains `mu = l_n < ... < l_0 = lambda`; variable `i` fills `l_i / l_{i+1}`.
pub fn skew_eval(kind: SkewKind, lambda: &Partition, mu: &Partition, vars: &Alphabet, t: &Scalar) -> Result<Scalar, HlError> {
    if !lambda.contains(mu) {
        return Ok(Scalar::zero());
    }
    let mut memo = HashMap::new();
    chain_sum(kind, lambda, mu, vars.values(), t, &mut memo)
}

fn chain_sum(
    kind: SkewKind,
    lambda: &Partition,
    mu: &Partition,
    vars: &[Scalar],
    t: &Scalar,
    memo: &mut HashMap<(Partition, usize), Scalar>,
) -> Result<Scalar, HlError> {
    if vars.is_empty() {
        return Ok(if lambda == mu { Scalar::one() } else { Scalar::zero() });
    }
    let key = (lambda.clone(), vars.len());
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    let pieri = match kind {
        SkewKind::P => PieriKind::Psi,
        SkewKind::QOmega => PieriKind::PhiPrime,
    };
    let mut total = Scalar::zero();
    for next in strips_below(lambda, pieri.strip()) {
        if !next.contains(mu) {
            continue;
        }
        let rest = chain_sum(kind, &next, mu, &vars[1..], t, memo)?;
        if rest.is_zero() {
            continue;
        }
        let weight = pieri_coeff(pieri, lambda, &next, t)?;
        total += weight * pow(&vars[0], (lambda.weight() - next.weight()) as i64)? * rest;
    }
    memo.insert(key, total.clone());
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{frac, int, tfactorial};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_tableaux() {
        let t = frac(3, 8);
        let v = Alphabet::direct(vec![frac(2, 5)]);
        assert_eq!(skew_eval(SkewKind::P, &p(&[2, 1]), &p(&[2, 1]), &v, &t).unwrap(), int(1));
        assert_eq!(skew_eval(SkewKind::P, &p(&[1]), &p(&[]), &v, &t).unwrap(), frac(2, 5));
        let phi = pieri_coeff(PieriKind::PhiPrime, &p(&[1]), &p(&[]), &t).unwrap();
        assert_eq!(skew_eval(SkewKind::QOmega, &p(&[1]), &p(&[]), &v, &t).unwrap(), frac(2, 5) * phi);
        assert_eq!(skew_eval(SkewKind::P, &p(&[1]), &p(&[2]), &v, &t).unwrap(), int(0));
    }

    #[test]
    fn one_variable_dual_state() {
        let t = frac(3, 8);
        let x = frac(2, 5);
        let v = Alphabet::direct(vec![x.clone()]);
        for k in 0..5 {
            let expected = pow(&x, k as i64).unwrap() / tfactorial(k, &t);
            assert_eq!(skew_eval(SkewKind::QOmega, &p(&vec![1; k]), &p(&[]), &v, &t).unwrap(), expected);
        }
        assert_eq!(skew_eval(SkewKind::QOmega, &p(&[2]), &p(&[]), &v, &t).unwrap(), int(0));
    }
}
