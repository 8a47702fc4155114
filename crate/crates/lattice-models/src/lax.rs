//! Local Lax matrices of the q-boson and spin-s chains.

use exact_core::{pow, GradedOperator, Scalar, SparseMatrix};
use num_traits::{One, Zero};

use crate::SiteOperator;

/// 2×2 matrix of single-site operators, polynomial in `z`. Indexed `[row][col]`.
pub type Lax = [[GradedOperator; 2]; 2];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LaxKind {
    /// `L = [[1, zS̄], [S, z]]`.
    QBoson,
    /// `(1 + zs) L^s = [[1 + zK, zS⁻], [S⁺, z + K]]`.
    SpinS(Scalar),
}

fn graded(d0: Option<SparseMatrix>, d1: Option<SparseMatrix>, dim: usize) -> GradedOperator {
    let mut out = GradedOperator::new(dim, 1);
    for (deg, block) in [(0, d0), (1, d1)] {
        if let Some(b) = block {
            for (r, c, v) in b.entries() {
                out.add_entry(deg, r, c, v.clone());
            }
        }
    }
    out
}

/// Lax matrix of one site; spin-s entries are the cleared form without the `1/(1+zs)` prefactor.
pub fn build_lax(kind: &LaxKind, site: &SiteOperator) -> Lax {
    let dim = site.dim();
    let id = SparseMatrix::identity(dim);
    match kind {
        LaxKind::QBoson => [
            [graded(Some(id.clone()), None, dim), graded(None, Some(site.annihilate()), dim)],
            [graded(Some(site.create()), None, dim), graded(None, Some(id), dim)],
        ],
        LaxKind::SpinS(s) => [
            [graded(Some(id.clone()), Some(site.spin_k(s)), dim), graded(None, Some(site.spin_minus()), dim)],
            [graded(Some(site.spin_plus(s)), None, dim), graded(Some(site.spin_k(s)), Some(id), dim)],
        ],
    }
}

/// One term of a Lax entry acting on an occupation `m`: `coeff z^degree |m + delta>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalTerm {
    pub degree: usize,
    pub coeff: Scalar,
    pub delta: i64,
}

/// Lax entries as explicit actions on a single occupation number, used by the chain builders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalWeights {
    QBoson,
    SpinS(Scalar),
    /// `S = S̄ = 1`: the site carries no state.
    Trivial,
}

impl LocalWeights {
    /// Terms of the Lax entry `(a, b)` acting on occupation `m`.
    pub fn terms(&self, a: usize, b: usize, m: usize, t: &Scalar) -> Vec<LocalTerm> {
        let term = |degree, coeff: Scalar, delta| LocalTerm { degree, coeff, delta };
        let tm = pow(t, m as i64).expect("non-negative power");
        let one = Scalar::one();
        let mut out = match (self, a, b) {
            (Self::Trivial, 0, 0) | (Self::Trivial, 1, 0) => vec![term(0, one, 0)],
            (Self::Trivial, _, _) => vec![term(1, one, 0)],
            (Self::QBoson, 0, 0) => vec![term(0, one, 0)],
            (Self::QBoson, 1, 1) => vec![term(1, one, 0)],
            (Self::SpinS(s), 0, 0) => vec![term(0, one, 0), term(1, s * &tm, 0)],
            (Self::SpinS(s), 1, 1) => vec![term(0, s * &tm, 0), term(1, one, 0)],
            (Self::QBoson, 0, 1) | (Self::SpinS(_), 0, 1) => {
                if m == 0 {
                    vec![]
                } else {
                    vec![term(1, one - tm, -1)]
                }
            }
            (Self::QBoson, _, _) => vec![term(0, one, 1)],
            (Self::SpinS(s), _, _) => vec![term(0, one - s * s * tm, 1)],
        };
        out.retain(|x| !x.coeff.is_zero());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::frac;

    #[test]
    fn spin_zero_is_qboson() {
        let site = SiteOperator::new(4, frac(2, 7));
        let q = build_lax(&LaxKind::QBoson, &site);
        let s = build_lax(&LaxKind::SpinS(Scalar::zero()), &site);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(q[i][j].first_mismatch(&s[i][j]), None);
            }
        }
        let z0 = q[0][0].evaluate(&Scalar::zero());
        assert_eq!(z0, SparseMatrix::identity(5));
        assert!(q[0][1].evaluate(&Scalar::zero()).is_zero());
    }

    #[test]
    fn weights_match_matrices() {
        let t = frac(1, 3);
        let site = SiteOperator::new(5, t.clone());
        for (kind, w) in [
            (LaxKind::QBoson, LocalWeights::QBoson),
            (LaxKind::SpinS(frac(2, 5)), LocalWeights::SpinS(frac(2, 5))),
        ] {
            let lax = build_lax(&kind, &site);
            for a in 0..2 {
                for b in 0..2 {
                    for m in 0..5 {
                        let mut expect = GradedOperator::new(6, 1);
                        for term in w.terms(a, b, m, &t) {
                            expect.add_entry(term.degree, (m as i64 + term.delta) as usize, m, term.coeff);
                        }
                        for d in 0..2 {
                            for r in 0..6 {
                                assert_eq!(lax[a][b].get(d, r, m), expect.get(d, r, m));
                            }
                        }
                    }
                }
            }
        }
    }
}
