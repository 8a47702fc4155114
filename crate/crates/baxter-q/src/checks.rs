//! Identities satisfied by the Q-matrix.

use std::collections::BTreeMap;

use exact_core::{bar_adjoint, pow, CheckOutcome, GradedOperator, Scalar};
use lattice_models::{
    commutes_with, open_toda_transfer, periodic_transfer, translation, OpenKind,
};
use num_traits::{One, Zero};
use partition_space::{Basis, Partition, PartitionConstraint};
use vertex_operators::{build_gamma, Family, Sign};

use crate::{build_qmatrix, null_psi, BaxterError};

/// `Λ_N(z) q_n(z) = q_n(tz) + x z^N t^n q_n(z/t)`, as graded matrices and at `sample_z`.
pub fn tq_check(sites: usize, n: usize, x: &Scalar, t: &Scalar, sample_z: &Scalar) -> Result<CheckOutcome, BaxterError> {
    if t.is_zero() {
        return Err(BaxterError::ZeroT);
    }
    let lam = periodic_transfer(sites, n, x, t)?.op;
    let q = build_qmatrix(sites, n, x, t)?.op;
    let lhs = lam.compose(&q, sites + n)?;
    let back = q.reparameterize(&(Scalar::one() / t)).shift(sites).scale(&(x * pow(t, n as i64)?));
    let rhs = q.reparameterize(t).add(&back)?;
    let graded = CheckOutcome::exact(lhs.first_mismatch(&rhs), "graded TQ relation");
    let (l, r) = (lhs.evaluate(sample_z), rhs.evaluate(sample_z));
    let sampled = if l == r {
        CheckOutcome::pass("TQ relation at the sample point")
    } else {
        CheckOutcome::fail(format!("TQ relation fails at z = {sample_z}"))
    };
    Ok(CheckOutcome::all([graded, sampled], format!("TQ, N = {sites}, n = {n}")))
}

fn cross_commute(a: &GradedOperator, b: &GradedOperator) -> Result<Option<String>, BaxterError> {
    for (i, x) in a.blocks() {
        for (j, y) in b.blocks() {
            if x.mul(y)? != y.mul(x)? {
                return Ok(Some(format!("degree {i} and {j} blocks")));
            }
        }
    }
    Ok(None)
}

/// `[Λ(z₁), q(z₂)] = 0` for all `z₁, z₂`, blockwise.
pub fn lambda_q_commute_check(sites: usize, n: usize, x: &Scalar, t: &Scalar) -> Result<CheckOutcome, BaxterError> {
    let lam = periodic_transfer(sites, n, x, t)?.op;
    let q = build_qmatrix(sites, n, x, t)?.op;
    Ok(CheckOutcome::exact(cross_commute(&lam, &q)?, "[Λ, q] = 0"))
}

/// `[q(z₁), q(z₂)] = 0`, blockwise.
pub fn q_q_commute_check(sites: usize, n: usize, x: &Scalar, t: &Scalar) -> Result<CheckOutcome, BaxterError> {
    let q = build_qmatrix(sites, n, x, t)?.op;
    Ok(CheckOutcome::exact(cross_commute(&q, &q)?, "[q, q] = 0"))
}

/// `q 𝒯 = 𝒯 q`.
pub fn q_translation_check(sites: usize, n: usize, x: &Scalar, t: &Scalar) -> Result<CheckOutcome, BaxterError> {
    let q = build_qmatrix(sites, n, x, t)?.op;
    let shift = translation(sites, n, x)?.op.block_or_zero(0);
    Ok(commutes_with(&q, &shift)?)
}

/// `𝒯 𝒩⁻¹ q(z; 1/x)ᵀ 𝒩` in degree `j` equals `(-1)^n q(z; x)` in degree `n - j`.
pub fn q_hermiticity_check(sites: usize, n: usize, x: &Scalar, t: &Scalar) -> Result<CheckOutcome, BaxterError> {
    let direct = build_qmatrix(sites, n, x, t)?;
    let inverse = build_qmatrix(sites, n, &(Scalar::one() / x), t)?;
    let norms = direct.basis.norms(t);
    let shift = translation(sites, n, x)?.op;
    let lhs = shift.compose(&bar_adjoint(&inverse.op, &norms)?, n)?;
    let sign = if n % 2 == 1 { -Scalar::one() } else { Scalar::one() };
    let rhs = direct.op.reflect(n)?.scale(&sign);
    Ok(CheckOutcome::exact(lhs.first_mismatch(&rhs), format!("q hermiticity, N = {sites}, n = {n}")))
}

type Sequence = BTreeMap<i64, Scalar>;

fn add_into(out: &mut Sequence, v: &Sequence, c: &Scalar) {
    for (k, w) in v {
        *out.entry(*k).or_insert_with(Scalar::zero) += w * c;
    }
}

fn cleaned(mut v: Sequence) -> Sequence {
    v.retain(|_, w| !w.is_zero());
    v
}

/// Single-site triangularity of the gauge-transformed Lax matrix on the null vector
/// `ψ_b = ψ^{a,c}_b(-z)`, `c <= b <= a`, with `X` raising `b` and `x = t^b`:
/// `ψ + zXψ - t^a zX x⁻¹ψ = ψ(tz)`, `-t^c (ψ(tz)) + xψ = 0` and `t^c zX x⁻¹ψ = zX ψ(z/t)`.
pub fn triangularity_check(a: i64, c: i64, z: &Scalar, t: &Scalar) -> Result<CheckOutcome, BaxterError> {
    let psi = |arg: &Scalar| -> Result<Sequence, BaxterError> {
        (c..=a).map(|b| Ok((b, null_psi(a, b, c, &-arg, t)?))).collect()
    };
    let raise = |v: &Sequence| -> Sequence { v.iter().map(|(b, w)| (b + 1, w.clone())).collect() };
    let weigh = |v: &Sequence, e: i64| -> Result<Sequence, BaxterError> {
        v.iter().map(|(b, w)| Ok((*b, w * pow(t, e * b)?))).collect()
    };
    let p = psi(z)?;
    let one = Scalar::one();
    let ta = pow(t, a)?;
    let tc = pow(t, c)?;
    let lowered = raise(&weigh(&p, -1)?);

    let mut e11 = Sequence::new();
    add_into(&mut e11, &p, &one);
    add_into(&mut e11, &raise(&p), z);
    add_into(&mut e11, &lowered, &-(&ta * z));
    let e11 = cleaned(e11);

    let mut e12 = Sequence::new();
    add_into(&mut e12, &e11, &-tc.clone());
    add_into(&mut e12, &weigh(&p, 1)?, &one);
    let e12 = cleaned(e12);

    let mut e22 = Sequence::new();
    add_into(&mut e22, &lowered, &(&tc * z));
    let e22 = cleaned(e22);
    let mut expect22 = Sequence::new();
    add_into(&mut expect22, &raise(&psi(&(z / t))?), z);
    let expect22 = cleaned(expect22);

    let outcomes = [
        (e11 == cleaned(psi(&(z * t))?), "upper-left diagonal"),
        (e12.is_empty(), "upper-right vanishes"),
        (e22 == expect22, "lower-right diagonal"),
    ];
    Ok(CheckOutcome::all(
        outcomes.into_iter().map(|(ok, d)| if ok { CheckOutcome::pass(d) } else { CheckOutcome::fail(d) }),
        format!("triangularity, a = {a}, c = {c}"),
    ))
}

/// `(1 + zǔ) A_N(z) Ā^R_N(u) 𝒩⁻¹ = Ā^R_N(u) 𝒩⁻¹ Ã_{N+1}(z)` on partitions with `λ₁ <= N + 1`,
/// weight `<= cap`, compared on sources of weight `<= cap - N - 1`. `Ā^R_N(u)` is
/// `Γ_{R,+}(ǔ)` restricted to rows with `λ₁ <= N`; `z` stays formal.
pub fn ar_project_check(sites: usize, u: &Scalar, t: &Scalar, cap: usize) -> Result<CheckOutcome, BaxterError> {
    let wide = Basis::partitions(PartitionConstraint { max_weight: cap, max_part: Some(sites + 1), max_length: None });
    let narrow = Basis::partitions(PartitionConstraint { max_weight: cap, max_part: Some(sites), max_length: None });
    let u_check = Scalar::one() / u;
    let gamma = build_gamma(Family::R, Sign::Plus, &wide, t)?.op.evaluate(&u_check);
    let norms = wide.norms(t);
    let mut projected = exact_core::SparseMatrix::zeros(wide.len());
    for (r, c, v) in gamma.entries() {
        if wide.state(r).largest() <= sites {
            projected.add_entry(r, c, v / &norms[c]);
        }
    }
    let projected = GradedOperator::constant(projected, 0);
    let embed = |p: &Partition| wide.index_of(p).expect("narrow basis sits inside the wide one");
    let a_narrow = open_toda_transfer(OpenKind::A, sites, &narrow, t)?;
    let mut a_n = GradedOperator::new(wide.len(), cap);
    for (deg, block) in a_narrow.blocks() {
        for (r, c, v) in block.entries() {
            a_n.add_entry(deg, embed(narrow.state(r)), embed(narrow.state(c)), v.clone());
        }
    }
    let a_tilde = open_toda_transfer(OpenKind::ATilde, sites + 1, &wide, t)?;
    let prefactor = GradedOperator::identity(wide.len(), 1).add(&GradedOperator::identity(wide.len(), 0).shift(1).scale(&u_check))?;
    let lhs = prefactor.compose(&a_n.compose(&projected, cap)?, cap + 1)?;
    let rhs = projected.compose(&a_tilde, cap)?;
    let window = cap.saturating_sub(sites + 1);
    let mismatch = lhs.first_mismatch_where(&rhs, |_, _, col| wide.state(col).weight() <= window);
    Ok(CheckOutcome::exact(mismatch, format!("Hall-Pieri projection, N = {sites}")))
}
