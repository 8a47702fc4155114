use std::collections::HashMap;
use std::hash::Hash;

use crate::{partitions_of, Occupation, Partition, PartitionError};

/// Bounds on an enumerated set of partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionConstraint {
    pub max_weight: usize,
    pub max_part: Option<usize>,
    pub max_length: Option<usize>,
}

impl PartitionConstraint {
    pub fn weight(max_weight: usize) -> Self {
        Self { max_weight, max_part: None, max_length: None }
    }

    pub fn admits(&self, p: &Partition) -> bool {
        p.weight() <= self.max_weight
            && self.max_part.is_none_or(|l| p.largest() <= l)
            && self.max_length.is_none_or(|m| p.len() <= m)
    }
}

/// Decreasing integer sequences of fixed length with entries in `[-bound, bound]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecreasingWindow {
    pub length: usize,
    pub bound: i64,
}

impl DecreasingWindow {
    /// Partitions with at most `length` parts and largest part `2 bound`, shifted down by `bound`.
    pub fn states(&self) -> Vec<Vec<i64>> {
        let span = (2 * self.bound).max(0) as usize;
        let constraint = PartitionConstraint {
            max_weight: span * self.length,
            max_part: Some(span),
            max_length: Some(self.length),
        };
        Basis::partitions(constraint)
            .states()
            .iter()
            .map(|p| (0..self.length).map(|i| p.part(i) as i64 - self.bound).collect())
            .collect()
    }

    /// The shift applied to recover a partition.
    pub fn shift(&self) -> i64 {
        self.bound
    }
}

/// Description of the states in a [`Basis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Partitions(PartitionConstraint),
    Occupations { sites: usize, particles: usize },
}

/// Ordered list of distinct states with an inverse index.
#[derive(Debug, Clone)]
pub struct Basis<S> {
    states: Vec<S>,
    index: HashMap<S, usize>,
    constraint: Constraint,
}

impl<S: Clone + Eq + Hash> Basis<S> {
    fn from_states(states: Vec<S>, constraint: Constraint) -> Self {
        let index = states.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Self { states, index, constraint }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[S] {
        &self.states
    }

    pub fn state(&self, i: usize) -> &S {
        &self.states[i]
    }

    pub fn index_of(&self, state: &S) -> Option<usize> {
        self.index.get(state).copied()
    }

    pub fn constraint(&self) -> Constraint {
        self.constraint
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &S)> {
        self.states.iter().enumerate()
    }
}

impl Basis<Partition> {
    /// Partitions satisfying the constraint, by weight, then lexicographically decreasing.
    pub fn partitions(constraint: PartitionConstraint) -> Self {
        let states = (0..=constraint.max_weight)
            .flat_map(|d| partitions_of(d, constraint.max_part, constraint.max_length))
            .collect();
        Self::from_states(states, Constraint::Partitions(constraint))
    }

    /// All partitions of weight at most `max_weight`.
    pub fn weight_capped(max_weight: usize) -> Self {
        Self::partitions(PartitionConstraint::weight(max_weight))
    }

    /// Norms `state_norm` of every basis state.
    pub fn norms(&self, t: &exact_core::Scalar) -> Vec<exact_core::Scalar> {
        self.states.iter().map(|p| p.state_norm(t)).collect()
    }

    /// Largest weight in the basis.
    pub fn max_weight(&self) -> usize {
        match self.constraint {
            Constraint::Partitions(c) => c.max_weight,
            Constraint::Occupations { .. } => unreachable!("partition basis"),
        }
    }
}

impl Basis<Occupation> {
    /// Occupation vectors on `sites` sites with `particles` particles, lexicographically decreasing.
    pub fn occupations(sites: usize, particles: usize) -> Result<Self, PartitionError> {
        if sites == 0 {
            return Err(PartitionError::Unbounded("an occupation basis needs at least one site"));
        }
        fn rec(sites: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Occupation>) {
            if prefix.len() + 1 == sites {
                prefix.push(left);
                out.push(Occupation(prefix.clone()));
                prefix.pop();
                return;
            }
            for v in (0..=left).rev() {
                prefix.push(v);
                rec(sites, left - v, prefix, out);
                prefix.pop();
            }
        }
        let mut states = Vec::new();
        rec(sites, particles, &mut Vec::new(), &mut states);
        Ok(Self::from_states(states, Constraint::Occupations { sites, particles }))
    }

    pub fn sites(&self) -> usize {
        match self.constraint {
            Constraint::Occupations { sites, .. } => sites,
            Constraint::Partitions(_) => unreachable!("occupation basis"),
        }
    }

    pub fn particles(&self) -> usize {
        match self.constraint {
            Constraint::Occupations { particles, .. } => particles,
            Constraint::Partitions(_) => unreachable!("occupation basis"),
        }
    }

    /// Norms `prod_k (v_k)!_t`.
    pub fn norms(&self, t: &exact_core::Scalar) -> Vec<exact_core::Scalar> {
        self.states
            .iter()
            .map(|o| o.0.iter().fold(exact_core::int(1), |acc, &v| acc * exact_core::tfactorial(v, t)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_partition_basis() {
        let b = Basis::weight_capped(2);
        let text: Vec<String> = b.states().iter().map(ToString::to_string).collect();
        assert_eq!(text, ["[]", "[1]", "[2]", "[1,1]"]);
        assert_eq!(Basis::weight_capped(4).len(), 12);
    }

    #[test]
    fn occupation_basis_order() {
        let b = Basis::occupations(2, 2).unwrap();
        let text: Vec<String> = b.states().iter().map(ToString::to_string).collect();
        assert_eq!(text, ["(2,0)", "(1,1)", "(0,2)"]);
        assert!(Basis::occupations(0, 1).is_err());
        assert_eq!(Basis::occupations(3, 0).unwrap().len(), 1);
    }

    #[test]
    fn windows() {
        let w = DecreasingWindow { length: 2, bound: 1 };
        let states = w.states();
        assert_eq!(states.len(), 6);
        assert!(states.contains(&vec![1, -1]));
        assert!(states.contains(&vec![-1, -1]));
    }

    #[test]
    fn index_inverts_states() {
        let b = Basis::partitions(PartitionConstraint { max_weight: 6, max_part: Some(3), max_length: Some(2) });
        for (i, s) in b.iter() {
            assert_eq!(b.index_of(s), Some(i));
            assert!(s.largest() <= 3 && s.len() <= 2);
        }
    }
}
