use std::fmt;
use std::str::FromStr;

use crate::partition::parse_list;
use crate::PartitionError;

/// Site occupation numbers `(v_1, ..., v_N)` of a chain, fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occupation(pub Vec<usize>);

impl Occupation {
    pub fn sites(&self) -> usize {
        self.0.len()
    }

    pub fn particles(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Occupation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl FromStr for Occupation {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Occupation(parse_list(s, '(', ')', "occupation")?))
    }
}
