//! Exact arithmetic foundation.
//!
//! Scalars are arbitrary precision rationals. Operators that depend
//! polynomially on a spectral parameter `z` are stored as a map from the
//! power of `z` to a sparse matrix, with an explicit truncation degree.

mod check;
mod error;
mod graded;
pub mod linalg;
mod scalar;
mod sparse;
mod tfactors;

pub use check::CheckOutcome;
pub use error::CoreError;
pub use graded::{bar_adjoint, GradedOperator, GradedVector};
pub use scalar::{format_scalar, frac, int, parse_scalar, parse_scalar_list, pow, Scalar};
pub use sparse::SparseMatrix;
pub use tfactors::{tbinom, tfactorial, tpoch};
