use exact_core::{int, Scalar};
use num_traits::Zero;

use crate::Alphabet;

/// Which generating function to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratingKind {
    /// `prod_k (1 - t z x_k) / (1 - z x_k)`, coefficients `q_r`.
    Complete,
    /// `prod_k (1 + z x_k)`, coefficients `e_r`.
    Elementary,
}

/// Truncated product of power series, each given by its coefficients.
pub fn series_product(factors: &[Vec<Scalar>], max_r: usize) -> Vec<Scalar> {
    let mut acc = vec![Scalar::zero(); max_r + 1];
    acc[0] = int(1);
    for f in factors {
        let mut next = vec![Scalar::zero(); max_r + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in f.iter().enumerate().take(max_r + 1 - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc
}

/// Coefficients of `z^r`, `r = 0..=max_r`, of the chosen generating function.
pub fn sym_gen_coeffs(kind: GeneratingKind, vars: &Alphabet, t: &Scalar, max_r: usize) -> Vec<Scalar> {
    let factors: Vec<Vec<Scalar>> = vars
        .values()
        .iter()
        .map(|x| match kind {
            GeneratingKind::Complete => {
                let mut f = vec![int(1)];
                let mut power = x.clone();
                for _ in 1..=max_r {
                    f.push((int(1) - t) * &power);
                    power *= x;
                }
                f
            }
            GeneratingKind::Elementary => vec![int(1), x.clone()],
        })
        .collect();
    series_product(&factors, max_r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::frac;

    #[test]
    fn low_coefficients() {
        let t = frac(1, 3);
        let x = Alphabet::direct(vec![frac(1, 2), frac(2, 5)]);
        let q = sym_gen_coeffs(GeneratingKind::Complete, &x, &t, 3);
        assert_eq!(q[0], int(1));
        assert_eq!(q[1], (int(1) - &t) * (frac(1, 2) + frac(2, 5)));
        let e = sym_gen_coeffs(GeneratingKind::Elementary, &x, &t, 4);
        assert_eq!(e[2], frac(1, 5));
        assert_eq!(e[3], int(0));
        assert_eq!(e[4], int(0));
    }
}
