use std::collections::BTreeMap;

use num_traits::Zero;

use crate::{CoreError, Scalar};

/// Square sparse matrix stored column by column; zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    dim: usize,
    cols: Vec<BTreeMap<usize, Scalar>>,
}

impl SparseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, cols: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.cols[i].insert(i, Scalar::from_integer(1.into()));
        }
        m
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, v) in entries.iter().enumerate() {
            m.add_entry(i, i, v.clone());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.cols[col].get(&row).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `value` to the entry at `(row, col)`.
    pub fn add_entry(&mut self, row: usize, col: usize, value: Scalar) {
        assert!(row < self.dim && col < self.dim, "entry ({row},{col}) outside dimension {}", self.dim);
        if value.is_zero() {
            return;
        }
        let column = &mut self.cols[col];
        match column.get_mut(&row) {
            Some(existing) => {
                *existing += value;
                if existing.is_zero() {
                    column.remove(&row);
                }
            }
            None => {
                column.insert(row, value);
            }
        }
    }

    /// Iterates over stored entries as `(row, col, value)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.cols.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn column(&self, col: usize) -> &BTreeMap<usize, Scalar> {
        &self.cols[col]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    fn check_dim(&self, other: &Self) -> Result<(), CoreError> {
        if self.dim != other.dim {
            return Err(CoreError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self, CoreError> {
        self.check_dim(other)?;
        let mut out = Self::zeros(self.dim);
        for (c, col) in other.cols.iter().enumerate() {
            for (k, w) in col {
                for (r, v) in &self.cols[*k] {
                    out.add_entry(*r, c, v * w);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self, CoreError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_entry(r, c, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CoreError> {
        self.add(&other.scale(&Scalar::from_integer((-1).into())))
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        let mut out = Self::zeros(self.dim);
        if factor.is_zero() {
            return out;
        }
        for (r, c, v) in self.entries() {
            out.cols[c].insert(r, v * factor);
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for (r, c, v) in self.entries() {
            out.cols[r].insert(c, v.clone());
        }
        out
    }

    /// `self * vector`.
    pub fn apply(&self, vector: &[Scalar]) -> Result<Vec<Scalar>, CoreError> {
        if vector.len() != self.dim {
            return Err(CoreError::DimensionMismatch { left: self.dim, right: vector.len() });
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (c, col) in self.cols.iter().enumerate() {
            if vector[c].is_zero() {
                continue;
            }
            for (r, v) in col {
                out[*r] += v * &vector[c];
            }
        }
        Ok(out)
    }

    /// `covector * self`.
    pub fn apply_left(&self, covector: &[Scalar]) -> Result<Vec<Scalar>, CoreError> {
        if covector.len() != self.dim {
            return Err(CoreError::DimensionMismatch { left: self.dim, right: covector.len() });
        }
        Ok(self
            .cols
            .iter()
            .map(|col| col.iter().fold(Scalar::zero(), |acc, (r, v)| acc + v * &covector[*r]))
            .collect())
    }

    /// Dense row-major copy.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); self.dim]; self.dim];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, int};

    #[test]
    fn product_and_identity() {
        let mut a = SparseMatrix::zeros(2);
        a.add_entry(0, 1, frac(1, 2));
        a.add_entry(1, 0, int(3));
        let id = SparseMatrix::identity(2);
        assert_eq!(a.mul(&id).unwrap(), a);
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, SparseMatrix::diagonal(&[frac(3, 2), frac(3, 2)]));
    }

    #[test]
    fn cancelling_entries_are_dropped() {
        let mut a = SparseMatrix::zeros(2);
        a.add_entry(0, 0, int(1));
        a.add_entry(0, 0, int(-1));
        assert!(a.is_zero());
        assert_eq!(a.nnz(), 0);
    }

    #[test]
    fn left_and_right_application() {
        let mut a = SparseMatrix::zeros(2);
        a.add_entry(0, 1, int(2));
        assert_eq!(a.apply(&[int(0), int(5)]).unwrap(), vec![int(10), int(0)]);
        assert_eq!(a.apply_left(&[int(5), int(0)]).unwrap(), vec![int(0), int(10)]);
        assert!(a.apply(&[int(1)]).is_err());
    }
}
