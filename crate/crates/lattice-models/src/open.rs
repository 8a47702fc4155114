//! Open chains on partitions with `λ₁ <= N`: the q-boson monodromy with a reservoir site and
//! its Toda forms.
//!
//! Site `k` of the q-boson chain holds `m_k(λ)`, the multiplicity of `k`; the Toda labels are
//! `λ′_1, ..., λ′_N`.

use exact_core::{pow, GradedOperator, Scalar, SparseMatrix};
use num_traits::One;
use partition_space::{Basis, Partition};

use crate::labels::{LabelMatrix, LabelOp};
use crate::{toda_bar_lax, toda_lax, toda_tilde_lax, LatticeError, LocalWeights};

/// Which open-chain generating function to build from Toda Lax matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpenKind {
    /// `A_N(z) = (T^Toda_N)_{11}`.
    A,
    /// `Ā_N(z) = T̄_11 - T̄_12`, graded in `ž = 1/z`.
    ABar,
    /// `Ã_N(z) = T̃_11 - T̃_12`, projected onto partitions.
    ATilde,
}

fn check_basis(basis: &Basis<Partition>, sites: usize) -> Result<(), LatticeError> {
    if sites == 0 {
        return Err(LatticeError::NoSites);
    }
    match basis.states().iter().find(|p| p.largest() > sites) {
        Some(p) => Err(LatticeError::NotAPartition(p.to_labels(p.largest()))),
        None => Ok(()),
    }
}

fn multiplicities(p: &Partition, sites: usize) -> Vec<usize> {
    (1..=sites).map(|k| p.multiplicity(k)).collect()
}

fn from_multiplicities(m: &[usize]) -> Partition {
    let mut parts = Vec::new();
    for (k, &mk) in m.iter().enumerate().rev() {
        parts.extend(std::iter::repeat_n(k + 1, mk));
    }
    Partition::new(parts).expect("decreasing by construction")
}

/// `A_N(z) = (L_0 L_1 ⋯ L_N)_{11}` with a trivial site 0 (`S_0 = S̄_0 = 1`).
///
/// Images heavier than the basis cap are dropped.
pub fn open_boson_transfer(sites: usize, basis: &Basis<Partition>, t: &Scalar) -> Result<GradedOperator, LatticeError> {
    check_basis(basis, sites)?;
    let cap = basis.max_weight();
    let mut op = GradedOperator::new(basis.len(), cap);
    let site_weights = |k: usize| if k == 0 { LocalWeights::Trivial } else { LocalWeights::QBoson };
    for (col, p) in basis.iter() {
        let mut occ = vec![0usize];
        occ.extend(multiplicities(p, sites));
        // (auxiliary state, degree, coefficient, occupations)
        let mut partial: Vec<(usize, usize, Scalar, Vec<usize>)> = vec![(0, 0, Scalar::one(), occ)];
        for k in 0..=sites {
            let weights = site_weights(k);
            let mut next = Vec::new();
            for (a, deg, c, occ) in partial {
                for b in 0..2 {
                    for term in weights.terms(a, b, occ[k], t) {
                        let mut o = occ.clone();
                        o[k] = (o[k] as i64 + term.delta) as usize;
                        next.push((b, deg + term.degree, &c * &term.coeff, o));
                    }
                }
            }
            partial = next;
        }
        for (a, deg, c, occ) in partial {
            if a != 0 {
                continue;
            }
            let image = from_multiplicities(&occ[1..]);
            if image.weight() > cap {
                continue;
            }
            let row = basis.index_of(&image).expect("weight and largest part within the basis");
            op.add_entry(deg, row, col, c);
        }
    }
    Ok(op)
}

/// Open-chain generating functions from Toda Lax matrices on labels `λ′_1, ..., λ′_N`.
pub fn open_toda_transfer(kind: OpenKind, sites: usize, basis: &Basis<Partition>, t: &Scalar) -> Result<GradedOperator, LatticeError> {
    check_basis(basis, sites)?;
    let laxes: Vec<LabelMatrix> = (0..sites)
        .map(|k| match kind {
            OpenKind::A => toda_lax(k, t),
            OpenKind::ABar => toda_bar_lax(k, t),
            OpenKind::ATilde => toda_tilde_lax(k, t),
        })
        .collect();
    let monodromy = LabelMatrix::product_of(&laxes).expect("sites > 0");
    let entry: LabelOp = match kind {
        OpenKind::A => monodromy.entry(0, 0).clone(),
        OpenKind::ABar | OpenKind::ATilde => monodromy.entry(0, 0).minus(monodromy.entry(0, 1)),
    };
    let sign = if kind == OpenKind::ABar { -1 } else { 1 };
    let cap = basis.max_weight();
    let mut op = GradedOperator::new(basis.len(), cap);
    for (col, p) in basis.iter() {
        for ((labels, deg), c) in entry.apply(&p.to_labels(sites)) {
            let degree = deg * sign;
            if degree < 0 {
                return Err(LatticeError::WrongGrading(deg));
            }
            let image = match Partition::from_labels(&labels) {
                Ok(p) => p,
                Err(_) if kind == OpenKind::ATilde => continue,
                Err(_) => return Err(LatticeError::NotAPartition(labels)),
            };
            if image.weight() > cap || degree as usize > cap {
                continue;
            }
            let row = basis.index_of(&image).ok_or(LatticeError::NotAPartition(labels))?;
            op.add_entry(degree as usize, row, col, c);
        }
    }
    Ok(op)
}

/// `S_1 + Σ_{k<N} S_{k+1} S̄_k` on the open chain; heavier images are dropped.
pub fn open_hamiltonian(sites: usize, basis: &Basis<Partition>, t: &Scalar) -> Result<SparseMatrix, LatticeError> {
    check_basis(basis, sites)?;
    let cap = basis.max_weight();
    let mut h = SparseMatrix::zeros(basis.len());
    for (col, p) in basis.iter() {
        let m = multiplicities(p, sites);
        let mut moves = vec![(None, 0usize)];
        moves.extend((0..sites - 1).filter(|&k| m[k] > 0).map(|k| (Some(k), k + 1)));
        for (from, to) in moves {
            let mut next = m.clone();
            let mut c = Scalar::one();
            if let Some(k) = from {
                c -= pow(t, m[k] as i64)?;
                next[k] -= 1;
            }
            next[to] += 1;
            let image = from_multiplicities(&next);
            if image.weight() <= cap {
                h.add_entry(basis.index_of(&image).expect("within the basis"), col, c);
            }
        }
    }
    Ok(h)
}
