//! The Baxter Q-matrix of the periodic chain, from its closed form and from a trace over the 𝕃 chain.
//!
//! Columns are labelled by `e_0 = n >= e_1 >= ... >= e_{N-1} >= e_N = 0`, rows by
//! `o_0, ..., o_{N-1}` with `e_k >= o_k >= e_{k+1}`, brought back to `o_0 = n` with `x^{n - o_0}`.
//! The occupation vector of labels with differences `m_k = e_k - e_{k+1}` is
//! `(m_{N-2}, ..., m_0, m_{N-1})`.

use exact_core::{pow, tbinom, tfactorial, GradedOperator, Scalar};
use num_traits::One;
use partition_space::{labels_from_occupations, occupations_from_labels, Basis, Occupation};

use crate::ll::{build_ll, Spectral};
use crate::BaxterError;

/// `q_n(z)` on the `n`-particle sector of `N` sites.
#[derive(Debug, Clone)]
pub struct QMatrix {
    pub basis: Basis<Occupation>,
    pub twist: Scalar,
    pub op: GradedOperator,
}

/// `ψ^{a,c}_b(z) = z^{b-c} [a-c, a-b]_t`.
pub fn null_psi(a: i64, b: i64, c: i64, z: &Scalar, t: &Scalar) -> Result<Scalar, BaxterError> {
    if !(a >= b && b >= c) {
        return Err(BaxterError::Ordering { a, b, c });
    }
    Ok(pow(z, b - c)? * tbinom(a - c, a - b, t)?)
}

/// Occupation vector of canonical labels `(e_0, ..., e_{N-1})`.
pub fn occupation_of_labels(labels: &[i64], n: usize) -> Result<Occupation, BaxterError> {
    let m = occupations_from_labels(labels, n)?;
    let len = m.len();
    let mut v: Vec<usize> = m[..len - 1].iter().rev().copied().collect();
    v.push(m[len - 1]);
    Ok(Occupation(v))
}

/// Canonical labels `(n, e_1, ..., e_{N-1})` of an occupation vector.
pub fn labels_of_occupation(v: &Occupation, n: usize) -> Result<Vec<i64>, BaxterError> {
    let v = v.as_slice();
    let len = v.len();
    let mut m: Vec<usize> = v[..len - 1].iter().rev().copied().collect();
    m.push(v[len - 1]);
    Ok(labels_from_occupations(&m, n)?)
}

fn sector(sites: usize, n: usize) -> Result<Basis<Occupation>, BaxterError> {
    Ok(Basis::occupations(sites, n)?)
}

/// Row index and gauge factor `x^{n - o_0}` of the labels `o`.
fn gauge_row(basis: &Basis<Occupation>, o: &[i64], n: usize, x: &Scalar) -> Result<(usize, Scalar), BaxterError> {
    let shift = n as i64 - o[0];
    let canonical: Vec<i64> = o.iter().map(|l| l + shift).collect();
    let v = occupation_of_labels(&canonical, n).map_err(|_| BaxterError::OutsideSector(o.to_vec()))?;
    let row = basis.index_of(&v).ok_or_else(|| BaxterError::OutsideSector(o.to_vec()))?;
    Ok((row, pow(x, shift)?))
}

/// Closed form: `(-z)^{Σ e_k - o_k} Π_k [e_k - e_{k+1}, e_k - o_k]_t`.
pub fn build_qmatrix(sites: usize, n: usize, x: &Scalar, t: &Scalar) -> Result<QMatrix, BaxterError> {
    let basis = sector(sites, n)?;
    let mut op = GradedOperator::new(basis.len(), n);
    for (col, v) in basis.iter() {
        let mut e = labels_of_occupation(v, n)?;
        e.push(0);
        let mut stack: Vec<Vec<i64>> = vec![vec![]];
        while let Some(o) = stack.pop() {
            let k = o.len();
            if k < sites {
                for ok in e[k + 1]..=e[k] {
                    let mut next = o.clone();
                    next.push(ok);
                    stack.push(next);
                }
                continue;
            }
            let mut coeff = Scalar::one();
            let mut degree = 0i64;
            for k in 0..sites {
                coeff *= tbinom(e[k] - e[k + 1], e[k] - o[k], t)?;
                degree += e[k] - o[k];
            }
            if degree % 2 == 1 {
                coeff = -coeff;
            }
            let (row, gauge) = gauge_row(&basis, &o, n, x)?;
            op.add_entry(degree as usize, row, col, coeff * gauge);
        }
    }
    Ok(QMatrix { basis, twist: x.clone(), op })
}

/// `q 𝒩⁻¹ = tr_s(𝕋_N D^s)` with `D^s = S^{-n}` and `ǔ = -z`, multiplied back by the norms.
///
/// Site `j` takes the auxiliary label `o_j` and the site label `e_j` to `(o_{j-1}, o_j)`; the
/// chain runs from site `N-1` to site `0` and the trace closes with `o_{-1} = o_{N-1} + n`.
pub fn build_qmatrix_trace(sites: usize, n: usize, x: &Scalar, t: &Scalar) -> Result<QMatrix, BaxterError> {
    let basis = sector(sites, n)?;
    let cap = 2 * n as i64 + 2;
    let ll = build_ll(&Spectral::Formal, t, cap);
    let mut op = GradedOperator::new(basis.len(), n);
    for (col, v) in basis.iter() {
        let e = labels_of_occupation(v, n)?;
        let norm = e
            .iter()
            .zip(e.iter().skip(1).chain(std::iter::once(&0)))
            .fold(Scalar::one(), |acc, (a, b)| acc * tfactorial((a - b) as usize, t));
        for sigma in -1..=cap - 1 {
            // (auxiliary label, new site labels from the right, degree, coefficient)
            let mut paths: Vec<(i64, Vec<i64>, i64, Scalar)> = vec![(sigma - n as i64, vec![], 0, Scalar::one())];
            for j in (0..sites).rev() {
                let mut next = Vec::new();
                for (aux, labels, deg, c) in paths {
                    for ((out, d), w) in ll.apply(&[aux, e[j]]) {
                        let mut l = labels.clone();
                        l.push(out[1]);
                        next.push((out[0], l, deg + d, &c * w));
                    }
                }
                paths = next;
            }
            for (aux, mut labels, deg, c) in paths {
                if aux != sigma {
                    continue;
                }
                labels.reverse();
                let sign = if deg % 2 == 1 { -Scalar::one() } else { Scalar::one() };
                let (row, gauge) = gauge_row(&basis, &labels, n, x)?;
                op.add_entry(deg as usize, row, col, c * sign * gauge * &norm);
            }
        }
    }
    Ok(QMatrix { basis, twist: x.clone(), op })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{frac, int};

    #[test]
    fn psi_values() {
        let t = frac(1, 3);
        assert_eq!(null_psi(2, 1, 0, &int(5), &t).unwrap(), int(5) * (Scalar::one() + &t));
        assert_eq!(null_psi(3, 3, 3, &int(5), &t).unwrap(), Scalar::one());
        assert_eq!(null_psi(4, 2, 2, &int(5), &t).unwrap(), Scalar::one());
        assert!(null_psi(1, 2, 0, &int(5), &t).is_err());
    }

    #[test]
    fn labels_round_trip() {
        let v = Occupation(vec![1, 0, 2]);
        let l = labels_of_occupation(&v, 3).unwrap();
        assert_eq!(occupation_of_labels(&l, 3).unwrap(), v);
    }

    #[test]
    fn empty_sector_is_identity() {
        let q = build_qmatrix(3, 0, &int(2), &frac(1, 2)).unwrap();
        assert_eq!(q.op.get(0, 0, 0), Scalar::one());
        assert_eq!(q.op.nnz(), 1);
    }
}
