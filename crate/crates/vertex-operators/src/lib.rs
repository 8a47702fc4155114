//! Half vertex operators on a weight-capped partition space.
//!
//! `Gamma_{L,-}` adds horizontal strips with weight `psi`, `Gamma_{L,+}` removes
//! them with weight `phi`; the `R` family does the same with vertical strips and
//! `phi'`, `psi'`. The spectral parameter enters only through the grading: the
//! degree-k block carries `z^k` for `Gamma_-` and `(1/z)^k` for `Gamma_+`.
//!
//! Identities are asserted on the interior window only: a statement of degree
//! `d` is checked on columns of weight at most `D - d`.

mod checks;
mod error;
mod gamma;

pub use checks::{
    commutation_factor, eigenvalue_series, gamma_adjoint_check, gamma_commutation_check, gamma_eigen_check,
    pieri_covector_check, skew_q_from_gamma,
};
pub use error::VertexError;
pub use gamma::{build_eigenstate, build_gamma, Family, Sign, StateKind, VertexOp};
