//! Single-site q-boson and spin-s operators on a truncated occupation space.

use exact_core::{pow, CheckOutcome, Scalar, SparseMatrix};
use num_traits::One;

use crate::LatticeError;

/// Operators on states `|0>, ..., |cap>` of one site.
#[derive(Debug, Clone)]
pub struct SiteOperator {
    cap: usize,
    t: Scalar,
}

impl SiteOperator {
    pub fn new(cap: usize, t: Scalar) -> Self {
        Self { cap, t }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn dim(&self) -> usize {
        self.cap + 1
    }

    fn tn(&self, n: usize) -> Scalar {
        pow(&self.t, n as i64).expect("non-negative power")
    }

    /// `S|n> = |n+1>`, dropped at the cap.
    pub fn create(&self) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.dim());
        for n in 0..self.cap {
            m.add_entry(n + 1, n, Scalar::one());
        }
        m
    }

    /// `S̄|n> = (1 - t^n)|n-1>`.
    pub fn annihilate(&self) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.dim());
        for n in 1..=self.cap {
            m.add_entry(n - 1, n, Scalar::one() - self.tn(n));
        }
        m
    }

    /// `τ|n> = t^n|n>`.
    pub fn tau(&self) -> SparseMatrix {
        SparseMatrix::diagonal(&(0..=self.cap).map(|n| self.tn(n)).collect::<Vec<_>>())
    }

    /// `K = sτ`.
    pub fn spin_k(&self, s: &Scalar) -> SparseMatrix {
        self.tau().scale(s)
    }

    /// `S⁺ = S(1 - s²τ)`.
    pub fn spin_plus(&self, s: &Scalar) -> SparseMatrix {
        let id = SparseMatrix::identity(self.dim());
        let inner = id.sub(&self.tau().scale(&(s * s))).expect("same dimension");
        self.create().mul(&inner).expect("same dimension")
    }

    /// `S⁻ = S⁻¹(1 - τ)`, which is `S̄`.
    pub fn spin_minus(&self) -> SparseMatrix {
        self.annihilate()
    }

    /// `t S S̄ - S̄ S = t - 1` on states below the cap.
    pub fn algebra_check(&self) -> Result<CheckOutcome, LatticeError> {
        if self.cap < 1 {
            return Err(LatticeError::CapTooSmall(self.cap, 1));
        }
        let s = self.create();
        let sb = self.annihilate();
        let lhs = s.mul(&sb)?.scale(&self.t).sub(&sb.mul(&s)?)?;
        let rhs = SparseMatrix::identity(self.dim()).scale(&(self.t.clone() - Scalar::one()));
        let bad = (0..self.cap).find_map(|col| {
            (0..self.dim()).find(|&row| lhs.get(row, col) != rhs.get(row, col)).map(|row| (row, col))
        });
        Ok(CheckOutcome::exact(bad.map(|(r, c)| format!("entry ({r}, {c})")), "t S S̄ - S̄ S = t - 1"))
    }
}
