//! Periodic transfer matrices on the `n`-particle sector of `N` sites.
//!
//! Internal site `k` (bond `k -> k+1`, the bond `N-1 -> 0` carries the twist `x`) holds the
//! occupation-vector component `v_k` for `k >= 1` and `v_N` for `k = 0`.

use std::collections::HashMap;

use exact_core::{bar_adjoint, pow, CheckOutcome, GradedOperator, Scalar, SparseMatrix};
use itertools::Itertools;
use num_traits::One;
use partition_space::{occupations_from_labels, Basis, Occupation};

use crate::labels::{LabelMatrix, LabelOp};
use crate::{toda_lax, LatticeError, LocalWeights};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Geometry {
    Open,
    Periodic { twist: Scalar },
}

/// A graded operator together with the basis it acts on.
#[derive(Debug, Clone)]
pub struct LatticeOperator<S> {
    pub basis: Basis<S>,
    pub geometry: Geometry,
    pub op: GradedOperator,
}

/// Occupation vector to internal site occupations.
pub fn to_sites(v: &Occupation) -> Vec<usize> {
    let v = v.as_slice();
    let n = v.len();
    std::iter::once(v[n - 1]).chain(v[..n - 1].iter().copied()).collect()
}

/// Internal site occupations to occupation vector.
pub fn from_sites(m: &[usize]) -> Occupation {
    Occupation(m[1..].iter().copied().chain(std::iter::once(m[0])).collect())
}

fn sector(sites: usize, n: usize) -> Result<Basis<Occupation>, LatticeError> {
    if sites == 0 {
        return Err(LatticeError::NoSites);
    }
    Ok(Basis::occupations(sites, n)?)
}

fn row_of(basis: &Basis<Occupation>, m: &[usize]) -> Result<usize, LatticeError> {
    let v = from_sites(m);
    basis.index_of(&v).ok_or(LatticeError::OutsideBasis(v.0))
}

/// `Λ_{N,x}(z)` from the expansion over bond subsets: each maximal cyclic run of bonds
/// `a, ..., b-1` moves one particle from `a` to `b`; the full ring contributes `x z^N`.
pub fn periodic_transfer(sites: usize, n: usize, x: &Scalar, t: &Scalar) -> Result<LatticeOperator<Occupation>, LatticeError> {
    let basis = sector(sites, n)?;
    let mut op = GradedOperator::new(basis.len(), sites);
    for (col, v) in basis.iter() {
        let m = to_sites(v);
        for bonds in (0..sites).map(|_| [false, true]).multi_cartesian_product() {
            let degree = bonds.iter().filter(|&&b| b).count();
            if degree == sites {
                op.add_entry(sites, col, col, x.clone());
                continue;
            }
            let mut hops = Vec::new();
            for start in (0..sites).filter(|&k| bonds[k] && !bonds[(k + sites - 1) % sites]) {
                let mut end = start;
                let mut wraps = false;
                while bonds[end % sites] {
                    wraps |= end % sites == sites - 1;
                    end += 1;
                }
                hops.push((start, end % sites, wraps));
            }
            let mut coeff = Scalar::one();
            let mut next = m.clone();
            let mut allowed = true;
            for &(from, _, wraps) in &hops {
                if next[from] == 0 {
                    allowed = false;
                    break;
                }
                coeff *= Scalar::one() - pow(t, next[from] as i64)?;
                next[from] -= 1;
                if wraps {
                    coeff *= x;
                }
            }
            if !allowed {
                continue;
            }
            for &(_, to, _) in &hops {
                next[to] += 1;
            }
            op.add_entry(degree, row_of(&basis, &next)?, col, coeff);
        }
    }
    Ok(LatticeOperator { basis, geometry: Geometry::Periodic { twist: x.clone() }, op })
}

/// `tr D T_N(z)` summed over auxiliary configurations, with the twist on auxiliary state 1 at bond `N-1 -> 0`.
///
/// For spin-s weights this is the cleared form `(1 + zs)^N Λ^s(z)`.
pub fn trace_transfer(
    weights: &LocalWeights,
    sites: usize,
    n: usize,
    x: &Scalar,
    t: &Scalar,
) -> Result<LatticeOperator<Occupation>, LatticeError> {
    let basis = sector(sites, n)?;
    let mut op = GradedOperator::new(basis.len(), sites);
    for (col, v) in basis.iter() {
        let m = to_sites(v);
        for aux in (0..sites).map(|_| [0usize, 1]).multi_cartesian_product() {
            let mut partial: Vec<(usize, Scalar, Vec<usize>)> = vec![(0, Scalar::one(), m.clone())];
            for k in 0..sites {
                let (a, b) = (aux[k], aux[(k + 1) % sites]);
                partial = partial
                    .into_iter()
                    .flat_map(|(deg, c, occ)| {
                        weights.terms(a, b, occ[k], t).into_iter().map(move |term| {
                            let mut occ = occ.clone();
                            occ[k] = (occ[k] as i64 + term.delta) as usize;
                            (deg + term.degree, &c * term.coeff, occ)
                        })
                    })
                    .collect();
            }
            let twist = if aux[0] == 1 { x.clone() } else { Scalar::one() };
            for (deg, c, occ) in partial {
                op.add_entry(deg, row_of(&basis, &occ)?, col, c * &twist);
            }
        }
    }
    Ok(LatticeOperator { basis, geometry: Geometry::Periodic { twist: x.clone() }, op })
}

/// `tr T^Toda_N D^Toda` with `D^Toda = diag(1, t^n)`, on canonical labels `l_0 = n`.
///
/// Output labels are brought back to `l_0 = n` through `|λ′⟩ = x |λ′ - 1⟩`.
pub fn toda_trace_transfer(sites: usize, n: usize, x: &Scalar, t: &Scalar) -> Result<LatticeOperator<Occupation>, LatticeError> {
    let basis = sector(sites, n)?;
    let laxes: Vec<LabelMatrix> = (0..sites).map(|k| toda_lax(k, t)).collect();
    let monodromy = LabelMatrix::product_of(&laxes).expect("sites > 0");
    let trace: LabelOp = monodromy.entry(0, 0).plus(&monodromy.entry(1, 1).scale(&pow(t, n as i64)?));
    let mut op = GradedOperator::new(basis.len(), sites);
    for (col, v) in basis.iter() {
        let m = to_sites(v);
        let mut labels = vec![n as i64];
        for k in 0..sites - 1 {
            labels.push(labels[k] - m[k] as i64);
        }
        for ((out, deg), c) in trace.apply(&labels) {
            let shift = n as i64 - out[0];
            let canonical: Vec<i64> = out.iter().map(|l| l + shift).collect();
            let occ = occupations_from_labels(&canonical, n)?;
            if deg < 0 {
                return Err(LatticeError::WrongGrading(deg));
            }
            op.add_entry(deg as usize, row_of(&basis, &occ)?, col, c * pow(x, -shift)?);
        }
    }
    Ok(LatticeOperator { basis, geometry: Geometry::Periodic { twist: x.clone() }, op })
}

/// One-step translation: every particle moves one site forward, crossing the twist bond with `x`.
pub fn translation(sites: usize, n: usize, x: &Scalar) -> Result<LatticeOperator<Occupation>, LatticeError> {
    let basis = sector(sites, n)?;
    let mut op = GradedOperator::new(basis.len(), 0);
    for (col, v) in basis.iter() {
        let m = to_sites(v);
        let moved: Vec<usize> = (0..sites).map(|k| m[(k + sites - 1) % sites]).collect();
        op.add_entry(0, row_of(&basis, &moved)?, col, pow(x, m[sites - 1] as i64)?);
    }
    Ok(LatticeOperator { basis, geometry: Geometry::Periodic { twist: x.clone() }, op })
}

/// `H_1 = Σ_k S_{k+1} S̄_k` on the ring, built from single hops.
pub fn hamiltonian(sites: usize, n: usize, x: &Scalar, t: &Scalar) -> Result<SparseMatrix, LatticeError> {
    let basis = sector(sites, n)?;
    let mut h = SparseMatrix::zeros(basis.len());
    for (col, v) in basis.iter() {
        let m = to_sites(v);
        for k in (0..sites).filter(|&k| m[k] > 0) {
            let mut next = m.clone();
            next[k] -= 1;
            next[(k + 1) % sites] += 1;
            let mut c = Scalar::one() - pow(t, m[k] as i64)?;
            if k == sites - 1 {
                c *= x;
            }
            h.add_entry(row_of(&basis, &next)?, col, c);
        }
    }
    Ok(h)
}

/// `𝒩⁻¹ Λ(z; 1/x)ᵀ 𝒩` in degree `j` equals `Λ(z; x)` in degree `N - j`, divided by `x`.
pub fn hermiticity_check(sites: usize, n: usize, x: &Scalar, t: &Scalar) -> Result<CheckOutcome, LatticeError> {
    let direct = periodic_transfer(sites, n, x, t)?;
    let inverse = periodic_transfer(sites, n, &(Scalar::one() / x), t)?;
    let norms = direct.basis.norms(t);
    let lhs = bar_adjoint(&inverse.op, &norms)?;
    let rhs = direct.op.reflect(sites)?.scale(&(Scalar::one() / x));
    Ok(CheckOutcome::exact(lhs.first_mismatch(&rhs), format!("Λ hermiticity, N = {sites}, n = {n}")))
}

/// All graded blocks of `op` commute pairwise, i.e. `[op(z1), op(z2)] = 0`.
pub fn commuting_blocks_check(op: &GradedOperator) -> Result<CheckOutcome, LatticeError> {
    let blocks: HashMap<usize, &SparseMatrix> = op.blocks().collect();
    let mut degrees: Vec<usize> = blocks.keys().copied().collect();
    degrees.sort_unstable();
    for (i, &a) in degrees.iter().enumerate() {
        for &b in &degrees[i + 1..] {
            let ab = blocks[&a].mul(blocks[&b])?;
            let ba = blocks[&b].mul(blocks[&a])?;
            if ab != ba {
                return Ok(CheckOutcome::fail(format!("blocks {a} and {b} do not commute")));
            }
        }
    }
    Ok(CheckOutcome::pass("graded blocks commute"))
}

/// `A B = B A` for a graded `A` and a constant `B`.
pub fn commutes_with(op: &GradedOperator, other: &SparseMatrix) -> Result<CheckOutcome, LatticeError> {
    for (deg, block) in op.blocks() {
        if block.mul(other)? != other.mul(block)? {
            return Ok(CheckOutcome::fail(format!("degree {deg} block does not commute")));
        }
    }
    Ok(CheckOutcome::pass("commutes"))
}

/// `𝒯^N = x^n` on the sector.
pub fn translation_power_check(sites: usize, n: usize, x: &Scalar) -> Result<CheckOutcome, LatticeError> {
    let shift = translation(sites, n, x)?;
    let step = shift.op.block_or_zero(0);
    let mut power = SparseMatrix::identity(step.dim());
    for _ in 0..sites {
        power = step.mul(&power)?;
    }
    let expect = SparseMatrix::identity(step.dim()).scale(&pow(x, n as i64)?);
    Ok(if power == expect {
        CheckOutcome::pass("translation to the power N is x^n")
    } else {
        CheckOutcome::fail("translation to the power N differs from x^n")
    })
}
