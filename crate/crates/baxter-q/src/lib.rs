//! Baxter Q-matrix of the periodic q-boson / q-Toda chain and the identities it satisfies.

mod checks;
mod error;
mod ll;
mod qmatrix;

pub use checks::{
    ar_project_check, lambda_q_commute_check, q_hermiticity_check, q_q_commute_check, q_translation_check, tq_check,
    triangularity_check,
};
pub use error::BaxterError;
pub use ll::{build_ll, build_ll_check, intertwining_check, Spectral};
pub use qmatrix::{build_qmatrix, build_qmatrix_trace, labels_of_occupation, null_psi, occupation_of_labels, QMatrix};
