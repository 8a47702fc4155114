use exact_core::{int, pow, tfactorial, Scalar};
use num_traits::One;
use partition_space::{strip_test, Partition, StripKind};

use crate::HlError;

/// The four branching coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PieriKind {
    /// Horizontal strips, multiplication by `q_r` in the `Q` basis.
    Psi,
    /// Horizontal strips, adjoint of `Psi`.
    Phi,
    /// Vertical strips, multiplication by `e_r` in the `P` basis.
    PsiPrime,
    /// Vertical strips, adjoint of `PsiPrime`.
    PhiPrime,
}

impl PieriKind {
    pub fn strip(self) -> StripKind {
        match self {
            PieriKind::Psi | PieriKind::Phi => StripKind::Horizontal,
            PieriKind::PsiPrime | PieriKind::PhiPrime => StripKind::Vertical,
        }
    }
}

/// Branching coefficient of `lambda / mu`.
pub fn pieri_coeff(kind: PieriKind, lambda: &Partition, mu: &Partition, t: &Scalar) -> Result<Scalar, HlError> {
    let strip = kind.strip();
    if !strip_test(lambda, mu, strip) {
        return Err(HlError::NotAStrip {
            lambda: lambda.to_string(),
            mu: mu.to_string(),
            kind: match strip {
                StripKind::Horizontal => "horizontal",
                StripKind::Vertical => "vertical",
            },
        });
    }
    let mut values: Vec<usize> = lambda.parts().iter().chain(mu.parts()).copied().collect();
    values.sort_unstable();
    values.dedup();
    let mut acc = Scalar::one();
    match kind {
        PieriKind::Psi => {
            for j in values {
                let (ml, mm) = (lambda.multiplicity(j), mu.multiplicity(j));
                if ml + 1 == mm {
                    acc *= int(1) - pow(t, mm as i64)?;
                }
            }
        }
        PieriKind::Phi => {
            for j in values {
                let (ml, mm) = (lambda.multiplicity(j), mu.multiplicity(j));
                if ml == mm + 1 {
                    acc *= int(1) - pow(t, ml as i64)?;
                }
            }
        }
        PieriKind::PsiPrime | PieriKind::PhiPrime => {
            let lc = lambda.conjugate();
            let mc = mu.conjugate();
            for i in 0..=lambda.largest() {
                let top = match kind {
                    PieriKind::PsiPrime => lc.part(i) - lc.part(i + 1),
                    _ => mc.part(i) - mc.part(i + 1),
                };
                acc *= tfactorial(top, t);
                acc /= tfactorial(lc.part(i) - mc.part(i), t) * tfactorial(mc.part(i) - lc.part(i + 1), t);
            }
        }
    }
    Ok(acc)
}
