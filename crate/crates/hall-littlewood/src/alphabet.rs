use exact_core::Scalar;

/// Whether the values stand for direct variables `v_i` or reciprocal ones `1/u_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphabetRole {
    Direct,
    Reciprocal,
}

/// Finite ordered list of evaluation values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    values: Vec<Scalar>,
    role: AlphabetRole,
}

impl Alphabet {
    pub fn direct(values: Vec<Scalar>) -> Self {
        Self { values, role: AlphabetRole::Direct }
    }

    pub fn reciprocal(values: Vec<Scalar>) -> Self {
        Self { values, role: AlphabetRole::Reciprocal }
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn role(&self) -> AlphabetRole {
        self.role
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The alphabet of all pairwise products `a_i b_j`.
    pub fn products(&self, other: &Alphabet) -> Alphabet {
        let values = self.values.iter().flat_map(|a| other.values.iter().map(move |b| a * b)).collect();
        Alphabet::direct(values)
    }

    /// Union of two alphabets.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut values = self.values.clone();
        values.extend(other.values.iter().cloned());
        Alphabet { values, role: self.role }
    }

    /// Values reordered by `order`.
    pub fn permuted(&self, order: &[usize]) -> Alphabet {
        Alphabet { values: order.iter().map(|&i| self.values[i].clone()).collect(), role: self.role }
    }

    /// The first `n` values.
    pub fn prefix(&self, n: usize) -> Alphabet {
        Alphabet { values: self.values[..n].to_vec(), role: self.role }
    }
}
