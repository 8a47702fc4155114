//! The auxiliary Lax operator 𝕃 on two spin spaces and the intertwining relation with the Toda chain.
//!
//! States are label pairs `[s-label, x-label]`.

use exact_core::{pow, tfactorial, CheckOutcome, Scalar};
use lattice_models::labels::first_difference;
use lattice_models::{toda_r_matrix, LabelMatrix, LabelOp, Terms};
use num_traits::One;

use crate::BaxterError;

/// How the spectral parameter enters 𝕃.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Spectral {
    /// Powers of `ǔ` are recorded as the grading of the result.
    Formal,
    /// Numeric `u`, with `ǔ = 1/u`.
    Point(Scalar),
}

/// `𝕃|ν_s, ν_x> = Σ_{μ_s >= ν_x} ǔ^{ν_x - ν_s} / ((μ_s - ν_x)!_t (ν_x - ν_s)!_t) |μ_s, ν_s>`
/// for `ν_x >= ν_s`, truncated at `μ_s <= cap`.
pub fn build_ll(u: &Spectral, t: &Scalar, cap: i64) -> LabelOp {
    let (u, t) = (u.clone(), t.clone());
    LabelOp::from_fn(move |l| {
        let (nu_s, nu_x) = (l[0], l[1]);
        let mut out = Terms::new();
        if nu_x < nu_s {
            return out;
        }
        let gap = nu_x - nu_s;
        let (degree, weight) = match &u {
            Spectral::Formal => (gap, Scalar::one()),
            Spectral::Point(u) => (0, pow(&(Scalar::one() / u), gap).expect("u is nonzero")),
        };
        let base = weight / tfactorial(gap as usize, &t);
        for mu in nu_x..=cap {
            out.insert((vec![mu, nu_s], degree), &base / tfactorial((mu - nu_x) as usize, &t));
        }
        out
    })
}

/// `𝕃̌ = 𝕃 P`, with `P` exchanging the two labels.
pub fn build_ll_check(u: &Spectral, t: &Scalar, cap: i64) -> LabelOp {
    let swap = LabelOp::from_fn(|l| Terms::from([((vec![l[1], l[0]], 0), Scalar::one())]));
    build_ll(u, t, cap).compose(&swap)
}

fn entrywise(m: &LabelMatrix, f: impl Fn(&LabelOp) -> LabelOp) -> LabelMatrix {
    LabelMatrix([[f(m.entry(0, 0)), f(m.entry(0, 1))], [f(m.entry(1, 0)), f(m.entry(1, 1))]])
}

fn scaled(op: LabelOp, c: &Scalar) -> LabelOp {
    op.scale(c)
}

/// Agreement of two operators on `states`, ignoring images with s-label above `bound`.
fn interior_difference(a: &LabelOp, b: &LabelOp, states: &[Vec<i64>], bound: i64) -> Option<String> {
    let trim = |op: &LabelOp| {
        let op = op.clone();
        LabelOp::from_fn(move |l| op.apply(l).into_iter().filter(|((o, _), _)| o[0] <= bound).collect())
    };
    first_difference(&trim(a), &trim(b), states)
}

/// The intertwining relation `R(z/u) L^Toda(z) 𝕃̌(u) = 𝕃̌(u) L̃(z) R(z/u)` and its four
/// component relations, on states with both labels below `window`, images with s-label `<= cap - 3`.
pub fn intertwining_check(z: &Scalar, u: &Scalar, t: &Scalar, cap: i64, window: i64) -> Result<CheckOutcome, BaxterError> {
    let w = z / u;
    let (s, x) = (0usize, 1usize);
    let zop = |op: LabelOp| op.scale(z);
    let r_s = toda_r_matrix(s, &w, t);
    let r_x = toda_r_matrix(x, &w, t);
    let minus_one = -Scalar::one();
    let toda_x = LabelMatrix([
        [LabelOp::identity().plus(&zop(LabelOp::raise(x, 1))), LabelOp::power(x, 1, t)],
        [scaled(zop(LabelOp::raise(x, 1).compose(&LabelOp::power(x, -1, t))), &minus_one), LabelOp::zero()],
    ]);
    let tilde_s = LabelMatrix([
        [
            LabelOp::identity().plus(&zop(LabelOp::raise(s, 1))),
            zop(LabelOp::power(s, 1, t).compose(&LabelOp::raise(s, 1))),
        ],
        [scaled(LabelOp::power(s, -1, t), &minus_one), LabelOp::zero()],
    ]);
    let ll = build_ll_check(&Spectral::Point(u.clone()), t, cap);
    let lhs = entrywise(&r_s.product(&toda_x), |e| e.compose(&ll));
    let rhs = entrywise(&tilde_s.product(&r_x), |e| ll.compose(e));
    let states: Vec<Vec<i64>> = (0..window).flat_map(|a| (0..window).map(move |b| vec![a, b])).collect();
    let bound = cap - 3;
    let mut outcomes = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let diff = interior_difference(lhs.entry(i, j), rhs.entry(i, j), &states, bound);
            outcomes.push(CheckOutcome::exact(diff, format!("intertwining entry ({i}, {j})")));
        }
    }
    let one = LabelOp::identity();
    let big_s = LabelOp::raise(s, 1);
    let small_x = LabelOp::power(x, 1, t);
    let x_over_s = small_x.compose(&LabelOp::power(s, -1, t));
    let s_over_x = LabelOp::power(s, 1, t).compose(&LabelOp::power(x, -1, t));
    let relations = [
        (ll.compose(&small_x), small_x.compose(&ll)),
        (
            LabelOp::chain(&[ll.clone(), big_s.clone(), LabelOp::raise(x, 1)]),
            LabelOp::chain(&[big_s.clone(), LabelOp::raise(x, 1), ll.clone()]),
        ),
        (ll.compose(&x_over_s), LabelOp::chain(&[x_over_s.clone(), one.minus(&big_s), ll.clone()])),
        (LabelOp::chain(&[ll.clone(), one.minus(&s_over_x), big_s.clone()]).scale(u), big_s.compose(&ll)),
    ];
    for (k, (a, b)) in relations.iter().enumerate() {
        let diff = interior_difference(a, b, &states, bound);
        outcomes.push(CheckOutcome::exact(diff, format!("component relation {}", k + 1)));
    }
    Ok(CheckOutcome::all(outcomes, "Toda intertwining relation"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{frac, int};

    #[test]
    fn ll_read_off() {
        let t = frac(1, 3);
        let ll = build_ll(&Spectral::Point(int(2)), &t, 4);
        let vac = ll.apply(&[0, 0]);
        assert_eq!(vac.len(), 5);
        assert_eq!(vac[&(vec![2, 0], 0)], Scalar::one() / tfactorial(2, &t));
        let one_gap = ll.apply(&[0, 1]);
        assert_eq!(one_gap[&(vec![1, 0], 0)], frac(1, 2) / (Scalar::one() - &t));
        assert!(ll.apply(&[2, 1]).is_empty());
    }

    #[test]
    fn printed_point() {
        let out = intertwining_check(&frac(3, 5), &frac(7, 2), &frac(2, 7), 14, 6).unwrap();
        assert!(out.passed, "{}", out.detail);
    }
}
