use std::fmt;
use std::str::FromStr;

use exact_core::{tfactorial, Scalar};
use num_traits::One;

use crate::PartitionError;

/// Weakly decreasing sequence of positive integers, trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Shape of a skew diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StripKind {
    /// At most one box per column.
    Horizontal,
    /// At most one box per row.
    Vertical,
}

impl Partition {
    /// Builds a partition, rejecting increasing sequences. Trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts.iter().map(|&p| p as i64).collect()));
        }
        Ok(Self::from_sorted(parts))
    }

    fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part, zero for the empty partition.
    pub fn largest(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.largest()).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect();
        Self { parts }
    }

    /// Number of parts equal to `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// The scalar product norm `prod_k (t)_{m_k}`.
    pub fn state_norm(&self, t: &Scalar) -> Scalar {
        let mut acc = Scalar::one();
        let mut i = 0;
        while i < self.parts.len() {
            let j = i + self.parts[i..].iter().take_while(|&&p| p == self.parts[i]).count();
            acc *= tfactorial(j - i, t);
            i = j;
        }
        acc
    }

    /// Conjugate parts padded with zeros to length `n`, as Toda labels.
    pub fn to_labels(&self, n: usize) -> Vec<i64> {
        let c = self.conjugate();
        (0..n.max(c.len())).map(|i| c.part(i) as i64).collect()
    }

    /// Inverse of [`Partition::to_labels`]. Fails on non-partition labels.
    pub fn from_labels(labels: &[i64]) -> Result<Self, PartitionError> {
        if labels.iter().any(|&l| l < 0) {
            return Err(PartitionError::NegativePart(labels.to_vec()));
        }
        if labels.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(labels.to_vec()));
        }
        Ok(Self::from_sorted(labels.iter().map(|&l| l as usize).collect()).conjugate())
    }
}

/// `true` when `lambda / mu` is a strip of the given kind.
pub fn strip_test(lambda: &Partition, mu: &Partition, kind: StripKind) -> bool {
    match kind {
        StripKind::Horizontal => {
            mu.len() <= lambda.len()
                && (0..lambda.len()).all(|i| lambda.part(i + 1) <= mu.part(i) && mu.part(i) <= lambda.part(i))
        }
        StripKind::Vertical => {
            lambda.contains(mu) && (0..lambda.len()).all(|i| lambda.part(i) - mu.part(i) <= 1)
        }
    }
}

/// All `nu` such that `lambda / nu` is a strip of the given kind.
pub fn strips_below(lambda: &Partition, kind: StripKind) -> Vec<Partition> {
    let len = lambda.len();
    let range = |i: usize| match kind {
        StripKind::Horizontal => (lambda.part(i + 1), lambda.part(i)),
        StripKind::Vertical => (lambda.part(i).saturating_sub(1), lambda.part(i)),
    };
    let mut out = Vec::new();
    let mut current = vec![0usize; len];
    fn rec(
        i: usize,
        len: usize,
        range: &dyn Fn(usize) -> (usize, usize),
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == len {
            out.push(Partition::from_sorted(current.clone()));
            return;
        }
        let (lo, hi) = range(i);
        let hi = if i > 0 { hi.min(current[i - 1]) } else { hi };
        for v in (lo..=hi).rev() {
            current[i] = v;
            rec(i + 1, len, range, current, out);
        }
    }
    rec(0, len, &range, &mut current, &mut out);
    out
}

/// All `lambda` of weight at most `max_weight` such that `lambda / mu` is a strip of the given kind.
pub fn strips_above(mu: &Partition, kind: StripKind, max_weight: usize) -> Vec<Partition> {
    let extra = max_weight.saturating_sub(mu.weight());
    let mut out = Vec::new();
    match kind {
        StripKind::Horizontal => {
            // lambda_1 in [mu_1, mu_1 + extra], lambda_{i+1} in [mu_{i+1}, mu_i]
            let len = mu.len() + 1;
            let mut current = vec![0usize; len];
            fn rec(i: usize, mu: &Partition, budget: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
                if i == current.len() {
                    out.push(Partition::from_sorted(current.clone()));
                    return;
                }
                let lo = mu.part(i);
                let hi = if i == 0 { lo + budget } else { mu.part(i - 1).min(lo + budget) };
                for v in lo..=hi {
                    current[i] = v;
                    rec(i + 1, mu, budget - (v - lo), current, out);
                }
            }
            rec(0, mu, extra, &mut current, &mut out);
        }
        StripKind::Vertical => {
            for c in strips_above(&mu.conjugate(), StripKind::Horizontal, max_weight) {
                out.push(c.conjugate());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Partitions of `n` in lexicographically decreasing order, with optional bounds.
pub fn partitions_of(n: usize, max_part: Option<usize>, max_length: Option<usize>) -> Vec<Partition> {
    fn rec(n: usize, cap: usize, len_left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        if len_left == 0 {
            return;
        }
        for k in (1..=cap.min(n)).rev() {
            prefix.push(k);
            rec(n - k, k, len_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part.unwrap_or(n), max_length.unwrap_or(n), &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}

pub(crate) fn parse_list(text: &str, open: char, close: char, kind: &'static str) -> Result<Vec<usize>, PartitionError> {
    let err = || PartitionError::Parse { kind, text: text.to_string() };
    let inner = text
        .trim()
        .strip_prefix(open)
        .and_then(|s| s.strip_suffix(close))
        .ok_or_else(err)?
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| err())).collect()
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_list(s, '[', ']', "partition")?)
    }
}
