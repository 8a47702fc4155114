//! Hall-Littlewood polynomials evaluated at exact rational alphabets.
//!
//! `R_mu` is the permutation sum
//! `sum_P prod_i u_{P_i}^{mu_i} prod_{i<j} (u_{P_i} - t u_{P_j}) / (u_{P_i} - u_{P_j})`,
//! from which `Q_lambda = (1-t)^n / (t)_{m_0} R_{lambda,0^{m_0}}` and
//! `P_lambda = Q_lambda / <lambda|lambda>`. Tableau sums give an independent route.

mod alphabet;
mod cauchy;
mod error;
mod generating;
mod pieri;
mod pieri_rule;
mod polynomials;
mod tableau;

pub use alphabet::{Alphabet, AlphabetRole};
pub use cauchy::{cauchy_coeff_check, CauchyKind};
pub use error::HlError;
pub use generating::{series_product, sym_gen_coeffs, GeneratingKind};
pub use pieri::{pieri_coeff, PieriKind};
pub use pieri_rule::{pieri_rule_check, PieriRule};
pub use polynomials::{hl_pq, hl_r, HlFamily, MAX_VARIABLES};
pub use tableau::{skew_eval, SkewKind};
