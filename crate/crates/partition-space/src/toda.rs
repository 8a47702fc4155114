//! Conversion between occupation numbers and Toda particle positions.
//!
//! Labels `l_0 >= l_1 >= ... >= l_{N-1} >= l_0 - n` carry the occupations
//! `m_k = l_k - l_{k+1}` with the closure `l_N = l_0 - n`.

use exact_core::{tfactorial, Scalar};
use num_traits::One;

use crate::PartitionError;

/// Occupations `m_k = l_k - l_{k+1}`, closing the ring with `l_N = l_0 - n`.
pub fn occupations_from_labels(labels: &[i64], n: usize) -> Result<Vec<usize>, PartitionError> {
    let len = labels.len();
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let next = if k + 1 < len { labels[k + 1] } else { labels[0] - n as i64 };
        let diff = labels[k] - next;
        if diff < 0 {
            return Err(PartitionError::BadLabels(labels.to_vec()));
        }
        out.push(diff as usize);
    }
    Ok(out)
}

/// Canonical labels with `l_0 = n`, inverse of [`occupations_from_labels`].
pub fn labels_from_occupations(m: &[usize], n: usize) -> Result<Vec<i64>, PartitionError> {
    if m.iter().sum::<usize>() != n {
        return Err(PartitionError::BadLabels(m.iter().map(|&v| v as i64).collect()));
    }
    let mut labels = Vec::with_capacity(m.len());
    let mut current = n as i64;
    for &mk in m {
        labels.push(current);
        current -= mk as i64;
    }
    Ok(labels)
}

/// Scalar product norm `prod_k (l_k - l_{k+1})!_t` in Toda labels.
pub fn toda_norm(labels: &[i64], n: usize, t: &Scalar) -> Result<Scalar, PartitionError> {
    Ok(occupations_from_labels(labels, n)?.into_iter().fold(Scalar::one(), |acc, m| acc * tfactorial(m, t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let m = vec![1, 0, 2];
        let l = labels_from_occupations(&m, 3).unwrap();
        assert_eq!(l, vec![3, 2, 2]);
        assert_eq!(occupations_from_labels(&l, 3).unwrap(), m);
        assert!(occupations_from_labels(&[1, 2], 3).is_err());
    }
}
