//! Six-vertex R-matrix and the RLL relation for the q-boson Lax matrix.

use exact_core::{CheckOutcome, Scalar, SparseMatrix};
use num_traits::Zero;

use crate::{build_lax, LatticeError, LaxKind, SiteOperator};

/// Six-vertex weights `a = ut - v`, `b = u - v`, `b̄ = t(u - v)`, `c = v(t - 1)`, `c̄ = u(t - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SixVertex {
    pub a: Scalar,
    pub b: Scalar,
    pub b_bar: Scalar,
    pub c: Scalar,
    pub c_bar: Scalar,
}

impl SixVertex {
    pub fn new(u: &Scalar, v: &Scalar, t: &Scalar) -> Self {
        let one = Scalar::from_integer(1.into());
        Self {
            a: u * t - v,
            b: u - v,
            b_bar: t * (u - v),
            c: v * (t - &one),
            c_bar: u * (t - &one),
        }
    }

    /// Matrix on the auxiliary pair, index `2 a1 + a2`.
    pub fn matrix(&self) -> [[Scalar; 4]; 4] {
        let mut r: [[Scalar; 4]; 4] = Default::default();
        r[0][0] = self.a.clone();
        r[3][3] = self.a.clone();
        r[1][1] = self.b.clone();
        r[1][2] = self.c_bar.clone();
        r[2][1] = self.c.clone();
        r[2][2] = self.b_bar.clone();
        r
    }
}

/// `R₁₂ L¹(u) L²(v) = L²(v) L¹(u) R₁₂` on one q-boson site, compared on occupations `<= cap - 2`.
///
/// The operator entry of `L¹(u) L²(v)` at `(2a1 + a2, 2b1 + b2)` is `L(u)[a1][b1] L(v)[a2][b2]`.
pub fn rll_check(u: &Scalar, v: &Scalar, t: &Scalar, cap: usize) -> Result<CheckOutcome, LatticeError> {
    if cap < 4 {
        return Err(LatticeError::CapTooSmall(cap, 4));
    }
    let site = SiteOperator::new(cap, t.clone());
    let lax = build_lax(&LaxKind::QBoson, &site);
    let lu: Vec<Vec<SparseMatrix>> = lax.iter().map(|row| row.iter().map(|e| e.evaluate(u)).collect()).collect();
    let lv: Vec<Vec<SparseMatrix>> = lax.iter().map(|row| row.iter().map(|e| e.evaluate(v)).collect()).collect();
    let r = SixVertex::new(u, v, t).matrix();
    let split = |i: usize| (i / 2, i % 2);
    let mut l12 = vec![vec![SparseMatrix::zeros(site.dim()); 4]; 4];
    let mut l21 = l12.clone();
    for i in 0..4 {
        for j in 0..4 {
            let ((a1, a2), (b1, b2)) = (split(i), split(j));
            l12[i][j] = lu[a1][b1].mul(&lv[a2][b2])?;
            l21[i][j] = lv[a2][b2].mul(&lu[a1][b1])?;
        }
    }
    for i in 0..4 {
        for j in 0..4 {
            let mut lhs = SparseMatrix::zeros(site.dim());
            let mut rhs = SparseMatrix::zeros(site.dim());
            for k in 0..4 {
                if !r[i][k].is_zero() {
                    lhs = lhs.add(&l12[k][j].scale(&r[i][k]))?;
                }
                if !r[k][j].is_zero() {
                    rhs = rhs.add(&l21[i][k].scale(&r[k][j]))?;
                }
            }
            for col in 0..=cap - 2 {
                for row in 0..site.dim() {
                    if lhs.get(row, col) != rhs.get(row, col) {
                        return Ok(CheckOutcome::fail(format!(
                            "RLL entry ({i}, {j}) on |{col}> -> |{row}>: {} != {}",
                            lhs.get(row, col),
                            rhs.get(row, col)
                        )));
                    }
                }
            }
        }
    }
    Ok(CheckOutcome::pass(format!("RLL on occupations <= {}", cap - 2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{frac, int};

    #[test]
    fn weights() {
        let w = SixVertex::new(&int(1), &frac(1, 2), &frac(1, 3));
        assert_eq!(w.a, frac(-1, 6));
        let classical = SixVertex::new(&int(3), &int(1), &int(1));
        assert_eq!(classical.a, int(2));
        assert_eq!(classical.b_bar, int(2));
        assert!(classical.c.is_zero() && classical.c_bar.is_zero());
    }

    #[test]
    fn rll_printed_point() {
        assert!(rll_check(&int(3), &int(5), &frac(2, 7), 5).unwrap().passed);
        assert!(rll_check(&int(3), &int(5), &int(1), 4).unwrap().passed);
        assert!(rll_check(&int(3), &int(5), &int(1), 3).is_err());
    }
}
