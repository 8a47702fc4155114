//! Coordinate Bethe ansatz for the spin-s chain and Gaudin determinant identities.
//!
//! Exact checks run in rationals. Root finding and the periodic eigenvector
//! residual use complex doubles.

mod ansatz;
mod eigen;
mod error;
mod gaudin;
mod solve;
mod weights;

pub use ansatz::{amplitude, bethe_vector, ipow, positions, spin_norm, xi, Field};
pub use eigen::{
    eigen_series, interior_eigen_check, interior_graded_check, path_weight, periodic_eigen_check, periodic_eigenvalue,
    spin_line_weight, PERIODIC_TOLERANCE,
};
pub use error::BetheError;
pub use gaudin::{
    gaudin_agreement, gaudin_det, gaudin_sum, lascoux_reduction_check, shift_polynomial, sum_tolerance, GaudinSum,
    MAX_GAUDIN_SIZE,
};
pub use solve::{bethe_residuals, bethe_solve, BetheSystem, ChainParams, SolveReport, SolverConfig, MAX_PARTICLES, MAX_SITES};
pub use weights::{geometric_sum_check, two_body_check, BoltzmannWeights};
