//! q-boson and Toda chains: local operators, R-matrices, monodromies and transfer matrices.

mod error;
pub mod labels;
mod lax;
mod open;
mod periodic;
mod rmatrix;
mod site;
mod toda;

pub use error::LatticeError;
pub use labels::{LabelMatrix, LabelOp, Terms};
pub use lax::{build_lax, Lax, LaxKind, LocalTerm, LocalWeights};
pub use open::{open_boson_transfer, open_hamiltonian, open_toda_transfer, OpenKind};
pub use periodic::{
    commutes_with, commuting_blocks_check, from_sites, hamiltonian, hermiticity_check, periodic_transfer,
    to_sites, toda_trace_transfer, trace_transfer, translation, translation_power_check, Geometry,
    LatticeOperator,
};
pub use rmatrix::{rll_check, SixVertex};
pub use site::SiteOperator;
pub use toda::{gauge_matrix, qboson_lax_in_labels, toda_bar_lax, toda_gauge_check, toda_lax, toda_r_matrix, toda_tilde_lax};
