//! Operators on integer label vectors with Laurent coefficients in `z`.
//!
//! `raise(k, e)` shifts label `k` by `e`; `power(k, e)` multiplies by `t^{e·l_k}`.
//! These realise the Toda variables `X_k` and `x_k = t^{λ′_k}`, with `x_k X_k = t X_k x_k`.

use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

use exact_core::{pow, Scalar};
use num_traits::{One, Zero};

/// Sparse combination: `(labels, power of z) -> coefficient`.
pub type Terms = BTreeMap<(Vec<i64>, i64), Scalar>;

fn accumulate(out: &mut Terms, key: (Vec<i64>, i64), value: Scalar) {
    let slot = out.entry(key).or_insert_with(Scalar::zero);
    *slot += value;
}

fn prune(mut terms: Terms) -> Terms {
    terms.retain(|_, v| !v.is_zero());
    terms
}

#[derive(Clone)]
pub struct LabelOp(Rc<dyn Fn(&[i64]) -> Terms>);

impl fmt::Debug for LabelOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("LabelOp")
    }
}

impl LabelOp {
    pub fn from_fn(f: impl Fn(&[i64]) -> Terms + 'static) -> Self {
        Self(Rc::new(f))
    }

    pub fn identity() -> Self {
        Self::from_fn(|l| Terms::from([((l.to_vec(), 0), Scalar::one())]))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_| Terms::new())
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::identity().scale(&c)
    }

    /// Multiplication by `z^p`.
    pub fn z(p: i64) -> Self {
        Self::from_fn(move |l| Terms::from([((l.to_vec(), p), Scalar::one())]))
    }

    pub fn raise(k: usize, e: i64) -> Self {
        Self::from_fn(move |l| {
            let mut out = l.to_vec();
            out[k] += e;
            Terms::from([((out, 0), Scalar::one())])
        })
    }

    pub fn power(k: usize, e: i64, t: &Scalar) -> Self {
        let t = t.clone();
        Self::from_fn(move |l| Terms::from([((l.to_vec(), 0), pow(&t, e * l[k]).expect("t is nonzero"))]))
    }

    pub fn apply(&self, labels: &[i64]) -> Terms {
        prune((self.0)(labels))
    }

    pub fn apply_terms(&self, terms: &Terms) -> Terms {
        let mut out = Terms::new();
        for ((l, d), c) in terms {
            for ((l2, d2), c2) in (self.0)(l) {
                accumulate(&mut out, (l2, d + d2), c * c2);
            }
        }
        prune(out)
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &LabelOp) -> Self {
        let (a, b) = (self.clone(), other.clone());
        Self::from_fn(move |l| a.apply_terms(&b.apply(l)))
    }

    pub fn plus(&self, other: &LabelOp) -> Self {
        let (a, b) = (self.clone(), other.clone());
        Self::from_fn(move |l| {
            let mut out = a.apply(l);
            for (k, v) in b.apply(l) {
                accumulate(&mut out, k, v);
            }
            prune(out)
        })
    }

    pub fn minus(&self, other: &LabelOp) -> Self {
        self.plus(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let (a, c) = (self.clone(), c.clone());
        Self::from_fn(move |l| a.apply(l).into_iter().map(|(k, v)| (k, v * &c)).collect())
    }

    /// Ordered product `ops[0] ∘ ops[1] ∘ ...`.
    pub fn chain(ops: &[LabelOp]) -> Self {
        ops.iter().fold(Self::identity(), |acc, op| acc.compose(op))
    }
}

/// 2×2 matrix of label operators.
#[derive(Debug, Clone)]
pub struct LabelMatrix(pub [[LabelOp; 2]; 2]);

impl LabelMatrix {
    pub fn entry(&self, i: usize, j: usize) -> &LabelOp {
        &self.0[i][j]
    }

    pub fn product(&self, other: &LabelMatrix) -> Self {
        let e = |i: usize, j: usize| self.0[i][0].compose(&other.0[0][j]).plus(&self.0[i][1].compose(&other.0[1][j]));
        Self([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn product_of(factors: &[LabelMatrix]) -> Option<Self> {
        let (first, rest) = factors.split_first()?;
        Some(rest.iter().fold(first.clone(), |acc, f| acc.product(f)))
    }
}

/// Differences between two operators on a list of states, as a description of the first one.
pub fn first_difference(a: &LabelOp, b: &LabelOp, states: &[Vec<i64>]) -> Option<String> {
    states.iter().find_map(|st| {
        let (x, y) = (a.apply(st), b.apply(st));
        (x != y).then(|| format!("on {st:?}: {x:?} != {y:?}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::frac;

    #[test]
    fn weyl_relation() {
        let t = frac(2, 5);
        let x = LabelOp::power(1, 1, &t);
        let raise = LabelOp::raise(1, 1);
        let lhs = x.compose(&raise);
        let rhs = raise.compose(&x).scale(&t);
        assert_eq!(first_difference(&lhs, &rhs, &[vec![0, 3], vec![2, -1]]), None);
        let inv = LabelOp::raise(1, -1).compose(&raise);
        assert_eq!(first_difference(&inv, &LabelOp::identity(), &[vec![1, 1]]), None);
    }
}
