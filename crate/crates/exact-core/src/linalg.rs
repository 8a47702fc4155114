//! Dense exact linear algebra by fraction-free Gaussian elimination.

use num_traits::{One, Zero};

use crate::{CoreError, Scalar};

/// Determinant of a square matrix given as rows.
pub fn determinant(rows: &[Vec<Scalar>]) -> Result<Scalar, CoreError> {
    let n = rows.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(CoreError::DimensionMismatch { left: n, right: bad.len() });
    }
    let mut a = rows.to_vec();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(Scalar::zero());
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    Ok(det)
}

/// Solves `A x = b` for square nonsingular `A`.
pub fn solve(rows: &[Vec<Scalar>], rhs: &[Scalar]) -> Result<Vec<Scalar>, CoreError> {
    let n = rows.len();
    if rhs.len() != n {
        return Err(CoreError::DimensionMismatch { left: n, right: rhs.len() });
    }
    let mut a: Vec<Vec<Scalar>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    if let Some(bad) = a.iter().find(|r| r.len() != n + 1) {
        return Err(CoreError::DimensionMismatch { left: n + 1, right: bad.len() });
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(CoreError::Singular)?;
        a.swap(pivot, col);
        let p = a[col][col].clone();
        for c in col..=n {
            a[col][c] /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..=n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    Ok(a.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, int};

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&[]).unwrap(), int(1));
        let m = vec![vec![int(0), int(2)], vec![int(3), frac(1, 2)]];
        assert_eq!(determinant(&m).unwrap(), int(-6));
        let sing = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(determinant(&sing).unwrap(), int(0));
    }

    #[test]
    fn solve_recovers_solution() {
        let m = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        let x = solve(&m, &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![frac(4, 5), frac(7, 5)]);
        let sing = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve(&sing, &[int(1), int(1)]), Err(CoreError::Singular));
    }
}
