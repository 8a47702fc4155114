use exact_core::{CheckOutcome, Scalar};
use num_traits::Zero;
use partition_space::partitions_of;

use crate::{hl_pq, skew_eval, sym_gen_coeffs, Alphabet, GeneratingKind, HlError, HlFamily, SkewKind};

/// Which Cauchy kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CauchyKind {
    /// `sum Q_lambda(U) P_lambda(V) = Omega_t(UV)`.
    Cauchy,
    /// `sum <lambda|lambda> Q^omega_lambda'(U) P_lambda(V) = prod (1 + u v)`.
    Dual,
}

/// Degree-by-degree comparison of both sides of the Cauchy identity.
pub fn cauchy_coeff_check(
    degree: usize,
    u: &Alphabet,
    v: &Alphabet,
    t: &Scalar,
    kind: CauchyKind,
) -> Result<CheckOutcome, HlError> {
    let kernel = match kind {
        CauchyKind::Cauchy => GeneratingKind::Complete,
        CauchyKind::Dual => GeneratingKind::Elementary,
    };
    let rhs = sym_gen_coeffs(kernel, &u.products(v), t, degree);
    let max_len = v.len();
    for d in 0..=degree {
        let mut lhs = Scalar::zero();
        for lambda in partitions_of(d, None, Some(max_len)) {
            let left = match kind {
                CauchyKind::Cauchy => hl_pq(HlFamily::Q, &lambda, u, t)?,
                CauchyKind::Dual => {
                    lambda.state_norm(t) * skew_eval(SkewKind::QOmega, &lambda, &Default::default(), u, t)?
                }
            };
            if left.is_zero() {
                continue;
            }
            lhs += left * hl_pq(HlFamily::P, &lambda, v, t)?;
        }
        if lhs != rhs[d] {
            return Ok(CheckOutcome::fail(format!("degree {d}: sum {lhs} != kernel {}", rhs[d])));
        }
    }
    Ok(CheckOutcome::pass(format!("{kind:?} kernel through degree {degree}")))
}
