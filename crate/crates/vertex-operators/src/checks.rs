use exact_core::{int, tfactorial, CheckOutcome, GradedOperator, Scalar, SparseMatrix};
use hall_littlewood::{hl_pq, sym_gen_coeffs, Alphabet, GeneratingKind, HlFamily};
use num_traits::Zero;
use partition_space::{Basis, Partition};

use crate::{build_gamma, Family, Sign, StateKind, VertexError, VertexOp};

/// Coefficient of `(v/u)^k` in the exchange factor of `Gamma_{a1,+}(u) Gamma_{a2,-}(v)`.
pub fn commutation_factor(a1: Family, a2: Family, k: usize, t: &Scalar) -> Scalar {
    match (a1, a2) {
        (Family::L, Family::L) => {
            if k == 0 {
                int(1)
            } else {
                int(1) - t
            }
        }
        (Family::R, Family::R) => tfactorial(k, t).recip(),
        _ => {
            if k <= 1 {
                int(1)
            } else {
                Scalar::zero()
            }
        }
    }
}

fn ensure_window(requested: usize, cap: usize) -> Result<(), VertexError> {
    if requested > cap {
        return Err(VertexError::WindowTooSmall { requested, cap });
    }
    Ok(())
}

/// Checks `Gamma_{a1,+}(u) Gamma_{a2,-}(v) = K(v/u) Gamma_{a2,-}(v) Gamma_{a1,+}(u)`
/// coefficientwise in `((1/u)^a, v^b)` for `a + b <= max_degree`.
pub fn gamma_commutation_check(
    a1: Family,
    a2: Family,
    t: &Scalar,
    basis: &Basis<Partition>,
    max_degree: usize,
) -> Result<CheckOutcome, VertexError> {
    let cap = basis.max_weight();
    ensure_window(max_degree, cap)?;
    let plus = build_gamma(a1, Sign::Plus, basis, t)?.op;
    let minus = build_gamma(a2, Sign::Minus, basis, t)?.op;
    let mut checked = 0usize;
    for a in 0..=max_degree {
        for b in 0..=max_degree - a {
            let lhs = plus.block_or_zero(a).mul(&minus.block_or_zero(b))?;
            let mut rhs = SparseMatrix::zeros(basis.len());
            for c in 0..=a.min(b) {
                let k = commutation_factor(a1, a2, c, t);
                if k.is_zero() {
                    continue;
                }
                let term = minus.block_or_zero(b - c).mul(&plus.block_or_zero(a - c))?;
                rhs = rhs.add(&term.scale(&k))?;
            }
            let lhs = GradedOperator::constant(lhs, 0);
            let rhs = GradedOperator::constant(rhs, 0);
            let mismatch = lhs.first_mismatch_where(&rhs, |_, _, col| basis.state(col).weight() + b <= cap);
            if let Some(m) = mismatch {
                return Ok(CheckOutcome::fail(format!(
                    "{a1:?}{a2:?} bidegree ({a}, {b}), {} -> {}: {} != {}",
                    basis.state(m.col),
                    basis.state(m.row),
                    m.left,
                    m.right
                )));
            }
            checked += 1;
        }
    }
    Ok(CheckOutcome::pass(format!("{a1:?}{a2:?} exchange relation on {checked} bidegrees")))
}

/// Coefficients of the eigenvalue generating function of `Gamma_{family,+}` on the given state.
pub fn eigenvalue_series(
    family: Family,
    state: StateKind,
    vars: &Alphabet,
    t: &Scalar,
    max_degree: usize,
) -> Result<Vec<Scalar>, VertexError> {
    match (family, state) {
        (Family::L, StateKind::L) => Ok(sym_gen_coeffs(GeneratingKind::Complete, vars, t, max_degree)),
        (Family::L, StateKind::R) | (Family::R, StateKind::L) => {
            Ok(sym_gen_coeffs(GeneratingKind::Elementary, vars, t, max_degree))
        }
        (Family::R, StateKind::R) => Err(VertexError::NoEigenRelation("Gamma_{R,+} on |R,V>".into())),
    }
}

/// Checks `Gamma |state> = (sum_k eigen_k z^k) |state>` degree by degree on the interior window.
pub fn gamma_eigen_check(
    op: &VertexOp,
    state: &[Scalar],
    eigen: &[Scalar],
    max_degree: usize,
) -> Result<CheckOutcome, VertexError> {
    if state.len() != op.basis.len() {
        return Err(VertexError::BasisMismatch);
    }
    let cap = op.weight_cap();
    ensure_window(max_degree, cap)?;
    for k in 0..=max_degree {
        let image = op.op.block_or_zero(k).apply(state)?;
        let factor = eigen.get(k).cloned().unwrap_or_else(Scalar::zero);
        for (row, lambda) in op.basis.iter() {
            if lambda.weight() + k > cap {
                continue;
            }
            let expected = &factor * &state[row];
            if image[row] != expected {
                return Ok(CheckOutcome::fail(format!(
                    "degree {k} component {lambda}: {} != {expected}",
                    image[row]
                )));
            }
        }
    }
    Ok(CheckOutcome::pass(format!("{:?}{:?} eigen relation through degree {max_degree}", op.family, op.sign)))
}

/// `Gamma_{f,+}` equals the norm adjoint of `Gamma_{f,-}` on the whole basis.
pub fn gamma_adjoint_check(family: Family, basis: &Basis<Partition>, t: &Scalar) -> Result<CheckOutcome, VertexError> {
    let plus = build_gamma(family, Sign::Plus, basis, t)?.op;
    let minus = build_gamma(family, Sign::Minus, basis, t)?.op;
    let adjoint = exact_core::bar_adjoint(&minus, &basis.norms(t))?;
    Ok(CheckOutcome::exact(plus.first_mismatch(&adjoint), format!("{family:?} adjoint pair")))
}

/// Checks `<U| Gamma_{L,-}` degree r `= q_r(U) <U|` with `<U|` built from `Q_lambda(U)`.
pub fn pieri_covector_check(
    u: &Alphabet,
    basis: &Basis<Partition>,
    t: &Scalar,
    max_degree: usize,
) -> Result<CheckOutcome, VertexError> {
    let cap = basis.max_weight();
    ensure_window(max_degree, cap)?;
    let minus = build_gamma(Family::L, Sign::Minus, basis, t)?.op;
    let covector: Vec<Scalar> =
        basis.states().iter().map(|l| hl_pq(HlFamily::Q, l, u, t)).collect::<Result<_, _>>()?;
    let q = sym_gen_coeffs(GeneratingKind::Complete, u, t, max_degree);
    for r in 0..=max_degree {
        let image = minus.block_or_zero(r).apply_left(&covector)?;
        for (col, mu) in basis.iter() {
            if mu.weight() + r > cap {
                continue;
            }
            if image[col] != &q[r] * &covector[col] {
                return Ok(CheckOutcome::fail(format!("degree {r}, component {mu}")));
            }
        }
    }
    Ok(CheckOutcome::pass(format!("Pieri covector through degree {max_degree}")))
}

/// Skew `Q_{lambda/mu}(U)` as the `(mu, lambda)` entry of `Gamma_{L,+}(u_1) ... Gamma_{L,+}(u_n)`,
/// where `Gamma_+(u)` is evaluated with its degree-k block weighted by `u^k`.
pub fn skew_q_from_gamma(
    lambda: &Partition,
    mu: &Partition,
    u: &Alphabet,
    basis: &Basis<Partition>,
    t: &Scalar,
) -> Result<Scalar, VertexError> {
    let plus = build_gamma(Family::L, Sign::Plus, basis, t)?.op;
    let (Some(col), Some(row)) = (basis.index_of(lambda), basis.index_of(mu)) else {
        return Err(VertexError::WindowTooSmall { requested: lambda.weight().max(mu.weight()), cap: basis.max_weight() });
    };
    let mut vector = vec![Scalar::zero(); basis.len()];
    vector[col] = int(1);
    for x in u.values().iter().rev() {
        vector = plus.evaluate(x).apply(&vector)?;
    }
    Ok(vector[row].clone())
}
