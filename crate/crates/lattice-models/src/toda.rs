//! Toda Lax matrices and the gauge equivalence with the q-boson chain.
//!
//! Label vectors hold Toda positions; `X_k` raises label `k` and `x_k = t^{label k}`.
//! In the gauge check, label 0 is `λ′_0` and the q-boson operators read
//! `S_k = X_0 X_1 ⋯ X_k`, `S̄_k = S_k⁻¹ (1 - x_k / x_{k+1})`.

use exact_core::{pow, CheckOutcome, Scalar};
use num_traits::One;

use crate::labels::{first_difference, LabelMatrix, LabelOp};
use crate::LatticeError;

fn x(k: usize, e: i64, t: &Scalar) -> LabelOp {
    LabelOp::power(k, e, t)
}

fn raise(k: usize, e: i64) -> LabelOp {
    LabelOp::raise(k, e)
}

/// `L^Toda_k = [[1 + zX_k, x_k], [-zX_k x_k⁻¹, 0]]`.
pub fn toda_lax(k: usize, t: &Scalar) -> LabelMatrix {
    let minus_one = -Scalar::one();
    LabelMatrix([
        [LabelOp::identity().plus(&LabelOp::z(1).compose(&raise(k, 1))), x(k, 1, t)],
        [LabelOp::z(1).compose(&raise(k, 1)).compose(&x(k, -1, t)).scale(&minus_one), LabelOp::zero()],
    ])
}

/// `L̄_k = [[1 + ž X_k⁻¹, ž X_k⁻¹ x_k], [-x_k⁻¹, 0]]` with `ž = 1/z`.
pub fn toda_bar_lax(k: usize, t: &Scalar) -> LabelMatrix {
    let minus_one = -Scalar::one();
    LabelMatrix([
        [
            LabelOp::identity().plus(&LabelOp::z(-1).compose(&raise(k, -1))),
            LabelOp::z(-1).compose(&raise(k, -1)).compose(&x(k, 1, t)),
        ],
        [x(k, -1, t).scale(&minus_one), LabelOp::zero()],
    ])
}

/// `L̃_k = [[1 + zX_k, z x_k X_k], [-x_k⁻¹, 0]]`.
pub fn toda_tilde_lax(k: usize, t: &Scalar) -> LabelMatrix {
    let minus_one = -Scalar::one();
    LabelMatrix([
        [
            LabelOp::identity().plus(&LabelOp::z(1).compose(&raise(k, 1))),
            LabelOp::z(1).compose(&x(k, 1, t)).compose(&raise(k, 1)),
        ],
        [x(k, -1, t).scale(&minus_one), LabelOp::zero()],
    ])
}

/// `R(w) = [[1 + wS, s], [-s⁻¹(1 - S), -1]]`, with `S` raising label `k` and `s = t^{label k}`.
pub fn toda_r_matrix(k: usize, w: &Scalar, t: &Scalar) -> LabelMatrix {
    let minus_one = -Scalar::one();
    LabelMatrix([
        [LabelOp::identity().plus(&raise(k, 1).scale(w)), x(k, 1, t)],
        [
            x(k, -1, t).compose(&LabelOp::identity().minus(&raise(k, 1))).scale(&minus_one),
            LabelOp::scalar(minus_one),
        ],
    ])
}

/// `S_k = X_0 ⋯ X_k`.
fn s_op(k: usize) -> LabelOp {
    LabelOp::chain(&(0..=k).map(|j| raise(j, 1)).collect::<Vec<_>>())
}

/// `S̄_k = S_k⁻¹ (1 - x_k x_{k+1}⁻¹)`.
fn s_bar_op(k: usize, t: &Scalar) -> LabelOp {
    let inverse = LabelOp::chain(&(0..=k).map(|j| raise(j, -1)).collect::<Vec<_>>());
    inverse.compose(&LabelOp::identity().minus(&x(k, 1, t).compose(&x(k + 1, -1, t))))
}

/// q-boson `L_k = [[1, zS̄_k], [S_k, z]]` written in Toda variables.
pub fn qboson_lax_in_labels(k: usize, t: &Scalar) -> LabelMatrix {
    LabelMatrix([
        [LabelOp::identity(), LabelOp::z(1).compose(&s_bar_op(k, t))],
        [s_op(k), LabelOp::z(1)],
    ])
}

/// `U_k = [[1, x_k], [S_k, 0]]`.
pub fn gauge_matrix(k: usize, t: &Scalar) -> LabelMatrix {
    LabelMatrix([[LabelOp::identity(), x(k, 1, t)], [s_op(k), LabelOp::zero()]])
}

fn diagonal(a: LabelOp, b: LabelOp) -> LabelMatrix {
    LabelMatrix([[a, LabelOp::zero()], [LabelOp::zero(), b]])
}

fn matrix_difference(a: &LabelMatrix, b: &LabelMatrix, states: &[Vec<i64>]) -> Option<String> {
    (0..2).flat_map(|i| (0..2).map(move |j| (i, j))).find_map(|(i, j)| {
        first_difference(a.entry(i, j), b.entry(i, j), states).map(|d| format!("entry ({i}, {j}) {d}"))
    })
}

fn label_grid(len: usize, window: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-window..=window).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

/// Gauge equivalence of the Toda and q-boson chains on `sites` sites with `n` particles.
///
/// Checks `U_{k-1} L^Toda_k = L_{k-1} U_k` for every site, `U_0 T^Toda_N = T_N U_N`, and
/// `D U_0 = U_N D^Toda` with `D = diag(1, X_1⋯X_N)`, `D^Toda = diag(1, t^n)` on states with
/// `λ′_0 = λ′_N + n`. Label entries range over `[-window, window]`; z stays formal.
pub fn toda_gauge_check(sites: usize, n: usize, t: &Scalar, window: i64) -> Result<CheckOutcome, LatticeError> {
    if sites == 0 {
        return Err(LatticeError::NoSites);
    }
    let states = label_grid(sites + 1, window);
    let mut outcomes = Vec::new();
    for k in 1..=sites {
        let lhs = gauge_matrix(k - 1, t).product(&toda_lax(k, t));
        let rhs = qboson_lax_in_labels(k - 1, t).product(&gauge_matrix(k, t));
        outcomes.push(CheckOutcome::exact(matrix_difference(&lhs, &rhs, &states), format!("site {k}")));
    }
    let toda: Vec<_> = (1..=sites).map(|k| toda_lax(k, t)).collect();
    let boson: Vec<_> = (0..sites).map(|k| qboson_lax_in_labels(k, t)).collect();
    let lhs = gauge_matrix(0, t).product(&LabelMatrix::product_of(&toda).expect("sites > 0"));
    let rhs = LabelMatrix::product_of(&boson).expect("sites > 0").product(&gauge_matrix(sites, t));
    outcomes.push(CheckOutcome::exact(matrix_difference(&lhs, &rhs, &states), "monodromy"));

    let periodic: Vec<Vec<i64>> = label_grid(sites, window)
        .into_iter()
        .map(|tail| {
            let mut v = vec![tail[sites - 1] + n as i64];
            v.extend(tail);
            v
        })
        .collect();
    let momentum = LabelOp::chain(&(1..=sites).map(|k| raise(k, 1)).collect::<Vec<_>>());
    let twist = diagonal(LabelOp::identity(), momentum);
    let toda_twist = diagonal(LabelOp::identity(), LabelOp::scalar(pow(t, n as i64)?));
    let lhs = twist.product(&gauge_matrix(0, t));
    let rhs = gauge_matrix(sites, t).product(&toda_twist);
    outcomes.push(CheckOutcome::exact(matrix_difference(&lhs, &rhs, &periodic), "periodic boundary"));
    Ok(CheckOutcome::all(outcomes, format!("Toda gauge equivalence, N = {sites}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::frac;

    #[test]
    fn gauge_small() {
        let out = toda_gauge_check(2, 2, &frac(1, 3), 2).unwrap();
        assert!(out.passed, "{}", out.detail);
    }

    #[test]
    fn r_matrix_corner() {
        let r = toda_r_matrix(0, &frac(1, 2), &frac(1, 3));
        assert_eq!(r.entry(1, 1).apply(&[4]), crate::Terms::from([((vec![4], 0), -Scalar::one())]));
    }

    #[test]
    fn x_raises_label() {
        let t = frac(1, 3);
        let l = toda_lax(0, &t);
        let terms = l.entry(1, 0).apply(&[2]);
        assert_eq!(terms.len(), 1);
        let ((labels, deg), c) = terms.into_iter().next().unwrap();
        assert_eq!((labels, deg), (vec![3], 1));
        assert_eq!(c, -frac(9, 1));
    }
}
