use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::{CoreError, Scalar, SparseMatrix};

/// A vector-valued polynomial in `z`: degree to coefficient vector.
pub type GradedVector = BTreeMap<usize, Vec<Scalar>>;

/// Polynomial in `z` with sparse square matrix coefficients.
///
/// Degrees above `max_degree` are never stored. Every product takes an explicit
/// truncation degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedOperator {
    dim: usize,
    max_degree: usize,
    blocks: BTreeMap<usize, SparseMatrix>,
}

/// First entry at which two graded operators differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub degree: usize,
    pub row: usize,
    pub col: usize,
    pub left: Scalar,
    pub right: Scalar,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "degree {} entry ({}, {}): {} != {}",
            self.degree, self.row, self.col, self.left, self.right
        )
    }
}

impl GradedOperator {
    pub fn new(dim: usize, max_degree: usize) -> Self {
        Self { dim, max_degree, blocks: BTreeMap::new() }
    }

    pub fn identity(dim: usize, max_degree: usize) -> Self {
        Self::constant(SparseMatrix::identity(dim), max_degree)
    }

    /// Degree-zero operator.
    pub fn constant(matrix: SparseMatrix, max_degree: usize) -> Self {
        let mut out = Self::new(matrix.dim(), max_degree);
        if !matrix.is_zero() {
            out.blocks.insert(0, matrix);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Highest degree with a nonzero block.
    pub fn top_degree(&self) -> Option<usize> {
        self.blocks.keys().next_back().copied()
    }

    pub fn block(&self, degree: usize) -> Option<&SparseMatrix> {
        self.blocks.get(&degree)
    }

    /// Block of the given degree, zero when absent.
    pub fn block_or_zero(&self, degree: usize) -> SparseMatrix {
        self.blocks.get(&degree).cloned().unwrap_or_else(|| SparseMatrix::zeros(self.dim))
    }

    pub fn blocks(&self) -> impl Iterator<Item = (usize, &SparseMatrix)> {
        self.blocks.iter().map(|(k, m)| (*k, m))
    }

    pub fn get(&self, degree: usize, row: usize, col: usize) -> Scalar {
        self.blocks.get(&degree).map(|m| m.get(row, col)).unwrap_or_else(Scalar::zero)
    }

    /// Adds `value` at `(row, col)` in the given degree. Panics above `max_degree`.
    pub fn add_entry(&mut self, degree: usize, row: usize, col: usize, value: Scalar) {
        assert!(
            degree <= self.max_degree,
            "degree {degree} exceeds truncation degree {}",
            self.max_degree
        );
        let block = self.blocks.entry(degree).or_insert_with(|| SparseMatrix::zeros(self.dim));
        block.add_entry(row, col, value);
        if block.is_zero() {
            self.blocks.remove(&degree);
        }
    }

    fn insert_block(&mut self, degree: usize, matrix: SparseMatrix) -> Result<(), CoreError> {
        if degree > self.max_degree || matrix.is_zero() {
            return Ok(());
        }
        let updated = match self.blocks.remove(&degree) {
            Some(existing) => existing.add(&matrix)?,
            None => matrix,
        };
        if !updated.is_zero() {
            self.blocks.insert(degree, updated);
        }
        Ok(())
    }

    fn check_dim(&self, other: &Self) -> Result<(), CoreError> {
        if self.dim != other.dim {
            return Err(CoreError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    /// Cauchy product `self * other`, truncated at `max_degree`.
    pub fn compose(&self, other: &Self, max_degree: usize) -> Result<Self, CoreError> {
        self.check_dim(other)?;
        let mut out = Self::new(self.dim, max_degree);
        for (i, a) in &self.blocks {
            for (j, b) in &other.blocks {
                if i + j <= max_degree {
                    out.insert_block(i + j, a.mul(b)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Product truncated at the sum of both truncation degrees.
    pub fn mul(&self, other: &Self) -> Result<Self, CoreError> {
        self.compose(other, self.max_degree + other.max_degree)
    }

    pub fn add(&self, other: &Self) -> Result<Self, CoreError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        out.max_degree = self.max_degree.max(other.max_degree);
        for (k, m) in &other.blocks {
            out.insert_block(*k, m.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CoreError> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        let mut out = Self::new(self.dim, self.max_degree);
        for (k, m) in &self.blocks {
            let scaled = m.scale(factor);
            if !scaled.is_zero() {
                out.blocks.insert(*k, scaled);
            }
        }
        out
    }

    /// The operator at `c z`: degree-k block scaled by `c^k`.
    pub fn reparameterize(&self, c: &Scalar) -> Self {
        let mut out = Self::new(self.dim, self.max_degree);
        let mut power = Scalar::one();
        let mut last = 0;
        for (k, m) in &self.blocks {
            while last < *k {
                power *= c;
                last += 1;
            }
            let scaled = m.scale(&power);
            if !scaled.is_zero() {
                out.blocks.insert(*k, scaled);
            }
        }
        out
    }

    /// Multiplication by `z^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        Self {
            dim: self.dim,
            max_degree: self.max_degree + shift,
            blocks: self.blocks.iter().map(|(k, m)| (k + shift, m.clone())).collect(),
        }
    }

    /// Drops every block above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        Self {
            dim: self.dim,
            max_degree,
            blocks: self.blocks.range(..=max_degree).map(|(k, m)| (*k, m.clone())).collect(),
        }
    }

    /// Degree reflection `z^d A(1/z)`: block k moves to degree `d - k`.
    pub fn reflect(&self, d: usize) -> Result<Self, CoreError> {
        if let Some(top) = self.top_degree() {
            if top > d {
                return Err(CoreError::DimensionMismatch { left: top, right: d });
            }
        }
        Ok(Self {
            dim: self.dim,
            max_degree: d,
            blocks: self.blocks.iter().map(|(k, m)| (d - k, m.clone())).collect(),
        })
    }

    pub fn transpose(&self) -> Self {
        Self {
            dim: self.dim,
            max_degree: self.max_degree,
            blocks: self.blocks.iter().map(|(k, m)| (*k, m.transpose())).collect(),
        }
    }

    /// `diag(left) * self * diag(right)`.
    pub fn scale_rows_cols(&self, left: &[Scalar], right: &[Scalar]) -> Result<Self, CoreError> {
        if left.len() != self.dim || right.len() != self.dim {
            return Err(CoreError::DimensionMismatch { left: self.dim, right: left.len().min(right.len()) });
        }
        let mut out = Self::new(self.dim, self.max_degree);
        for (k, m) in &self.blocks {
            for (r, c, v) in m.entries() {
                out.add_entry(*k, r, c, v * &left[r] * &right[c]);
            }
        }
        Ok(out)
    }

    /// Value at a sample point `z`.
    pub fn evaluate(&self, z: &Scalar) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.dim);
        for (k, m) in &self.blocks {
            let zk = crate::pow(z, *k as i64).expect("nonnegative power");
            for (r, c, v) in m.entries() {
                out.add_entry(r, c, v * &zk);
            }
        }
        out
    }

    /// Applies every block to a fixed vector.
    pub fn apply(&self, vector: &[Scalar]) -> Result<GradedVector, CoreError> {
        let mut out = GradedVector::new();
        for (k, m) in &self.blocks {
            out.insert(*k, m.apply(vector)?);
        }
        Ok(out)
    }

    /// Applies every block to a fixed covector from the left.
    pub fn apply_left(&self, covector: &[Scalar]) -> Result<GradedVector, CoreError> {
        let mut out = GradedVector::new();
        for (k, m) in &self.blocks {
            out.insert(*k, m.apply_left(covector)?);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Total number of stored entries.
    pub fn nnz(&self) -> usize {
        self.blocks.values().map(SparseMatrix::nnz).sum()
    }

    /// First differing entry, restricted to entries accepted by `keep(degree, row, col)`.
    pub fn first_mismatch_where<F>(&self, other: &Self, keep: F) -> Option<Mismatch>
    where
        F: Fn(usize, usize, usize) -> bool,
    {
        let degrees: std::collections::BTreeSet<usize> =
            self.blocks.keys().chain(other.blocks.keys()).copied().collect();
        for k in degrees {
            let a = self.block_or_zero(k);
            let b = other.block_or_zero(k);
            let mut cells: Vec<(usize, usize)> =
                a.entries().chain(b.entries()).map(|(r, c, _)| (c, r)).collect();
            cells.sort_unstable();
            cells.dedup();
            for (c, r) in cells {
                if !keep(k, r, c) {
                    continue;
                }
                let (x, y) = (a.get(r, c), b.get(r, c));
                if x != y {
                    return Some(Mismatch { degree: k, row: r, col: c, left: x, right: y });
                }
            }
        }
        None
    }

    /// First differing entry over all degrees and entries.
    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch> {
        self.first_mismatch_where(other, |_, _, _| true)
    }
}

/// The adjoint `N^{-1} A^T N` for the diagonal norm `N`.
///
/// Degrees are left untouched; callers reflect them as their bar convention requires.
pub fn bar_adjoint(op: &GradedOperator, norm: &[Scalar]) -> Result<GradedOperator, CoreError> {
    if norm.len() != op.dim() {
        return Err(CoreError::DimensionMismatch { left: op.dim(), right: norm.len() });
    }
    if let Some(i) = norm.iter().position(Zero::is_zero) {
        return Err(CoreError::ZeroNorm(i));
    }
    let inverse: Vec<Scalar> = norm.iter().map(|v| v.recip()).collect();
    op.transpose().scale_rows_cols(&inverse, norm)
}
