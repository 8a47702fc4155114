use exact_core::{GradedOperator, Scalar};
use hall_littlewood::{hl_pq, pieri_coeff, skew_eval, Alphabet, HlFamily, PieriKind, SkewKind};
use partition_space::{strips_below, Basis, Partition};

use crate::VertexError;

/// Strip shape of the operator family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    L,
    R,
}

/// `Minus` creates boxes, `Plus` removes them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Eigenvector families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateKind {
    /// Components `P_lambda(V)`.
    L,
    /// Components `Q^omega_lambda'(V)`.
    R,
}

/// Matrix realization of one half vertex operator.
#[derive(Debug, Clone)]
pub struct VertexOp {
    pub family: Family,
    pub sign: Sign,
    pub basis: Basis<Partition>,
    pub op: GradedOperator,
}

impl VertexOp {
    /// Largest degree for which a check on sources of weight `max_source` stays inside the basis.
    pub fn safe_degree(&self, max_source: usize) -> usize {
        self.basis.max_weight().saturating_sub(max_source)
    }

    pub fn weight_cap(&self) -> usize {
        self.basis.max_weight()
    }
}

/// Builds `Gamma_{family, sign}` on a weight-capped basis.
pub fn build_gamma(family: Family, sign: Sign, basis: &Basis<Partition>, t: &Scalar) -> Result<VertexOp, VertexError> {
    let cap = basis.max_weight();
    let kind = match (family, sign) {
        (Family::L, Sign::Minus) => PieriKind::Psi,
        (Family::L, Sign::Plus) => PieriKind::Phi,
        (Family::R, Sign::Minus) => PieriKind::PhiPrime,
        (Family::R, Sign::Plus) => PieriKind::PsiPrime,
    };
    let mut op = GradedOperator::new(basis.len(), cap);
    for (i, lambda) in basis.iter() {
        for nu in strips_below(lambda, kind.strip()) {
            let Some(j) = basis.index_of(&nu) else { continue };
            let value = pieri_coeff(kind, lambda, &nu, t)?;
            let degree = lambda.weight() - nu.weight();
            match sign {
                Sign::Minus => op.add_entry(degree, i, j, value),
                Sign::Plus => op.add_entry(degree, j, i, value),
            }
        }
    }
    Ok(VertexOp { family, sign, basis: basis.clone(), op })
}

/// Components of `|L,V>` or `|R,V>` on the basis.
pub fn build_eigenstate(kind: StateKind, vars: &Alphabet, basis: &Basis<Partition>, t: &Scalar) -> Result<Vec<Scalar>, VertexError> {
    basis
        .states()
        .iter()
        .map(|lambda| {
            Ok(match kind {
                StateKind::L => hl_pq(HlFamily::P, lambda, vars, t)?,
                StateKind::R => skew_eval(SkewKind::QOmega, lambda, &Partition::empty(), vars, t)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{frac, int, SparseMatrix};

    #[test]
    fn degree_zero_is_identity() {
        let basis = Basis::weight_capped(4);
        let t = frac(1, 3);
        for family in [Family::L, Family::R] {
            for sign in [Sign::Plus, Sign::Minus] {
                let g = build_gamma(family, sign, &basis, &t).unwrap();
                assert_eq!(g.op.block_or_zero(0), SparseMatrix::identity(basis.len()));
            }
        }
    }

    #[test]
    fn low_entries() {
        let basis = Basis::weight_capped(3);
        let t = frac(1, 3);
        let g = build_gamma(Family::L, Sign::Minus, &basis, &t).unwrap();
        let one: Partition = "[1]".parse().unwrap();
        let i = basis.index_of(&one).unwrap();
        assert_eq!(g.op.get(1, i, 0), int(1));
        let r = build_gamma(Family::R, Sign::Minus, &basis, &t).unwrap();
        let two: Partition = "[1,1]".parse().unwrap();
        let j = basis.index_of(&two).unwrap();
        let expected = pieri_coeff(PieriKind::PhiPrime, &two, &one, &t).unwrap();
        assert_eq!(r.op.get(1, j, i), expected);
        assert_eq!(g.safe_degree(1), 2);
    }

    #[test]
    fn empty_alphabet_gives_vacuum() {
        let basis = Basis::weight_capped(3);
        let t = frac(1, 3);
        for kind in [StateKind::L, StateKind::R] {
            let v = build_eigenstate(kind, &Alphabet::direct(vec![]), &basis, &t).unwrap();
            assert_eq!(v[0], int(1));
            assert!(v[1..].iter().all(|x| *x == int(0)));
        }
        let one_var = build_eigenstate(StateKind::L, &Alphabet::direct(vec![frac(2, 3)]), &basis, &t).unwrap();
        let three: Partition = "[3]".parse().unwrap();
        assert_eq!(one_var[basis.index_of(&three).unwrap()], frac(8, 27));
    }
}
