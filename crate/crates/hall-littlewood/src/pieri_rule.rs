use exact_core::{CheckOutcome, Scalar};
use num_traits::Zero;
use partition_space::{strips_above, Partition};

use crate::{hl_pq, pieri_coeff, sym_gen_coeffs, Alphabet, GeneratingKind, HlError, HlFamily, PieriKind};

/// Which multiplication rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieriRule {
    /// `q_r Q_mu = sum psi_{lambda/mu} Q_lambda` over horizontal r-strips.
    Complete,
    /// `e_r P_mu = sum psi'_{lambda/mu} P_lambda` over vertical r-strips.
    Elementary,
}

/// Evaluates both sides of a Pieri rule at the given alphabet.
pub fn pieri_rule_check(
    rule: PieriRule,
    mu: &Partition,
    r: usize,
    vars: &Alphabet,
    t: &Scalar,
) -> Result<CheckOutcome, HlError> {
    let (generating, family, coeff) = match rule {
        PieriRule::Complete => (GeneratingKind::Complete, HlFamily::Q, PieriKind::Psi),
        PieriRule::Elementary => (GeneratingKind::Elementary, HlFamily::P, PieriKind::PsiPrime),
    };
    let factor = sym_gen_coeffs(generating, vars, t, r)[r].clone();
    let lhs = factor * hl_pq(family, mu, vars, t)?;
    let target = mu.weight() + r;
    let mut rhs = Scalar::zero();
    for lambda in strips_above(mu, coeff.strip(), target) {
        if lambda.weight() != target {
            continue;
        }
        rhs += pieri_coeff(coeff, &lambda, mu, t)? * hl_pq(family, &lambda, vars, t)?;
    }
    Ok(CheckOutcome::exact(
        (lhs != rhs).then(|| format!("{lhs} != {rhs}")),
        format!("{rule:?} rule for mu = {mu}, r = {r}"),
    ))
}
