use std::fmt;

use crate::depth::{self, DepthError, DepthReport};
use crate::matrix::NonNegMatrix;

/// Integer partition, parts weakly decreasing and positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Returns `None` unless the parts are positive and nonincreasing.
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        ok.then_some(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && (0..other.parts.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Whether `self` is `other` with exactly one box added.
    pub fn covers(&self, other: &Partition) -> bool {
        self.weight() == other.weight() + 1 && self.contains(other)
    }

    /// Number of corners where a box can be added.
    pub fn addable_boxes(&self) -> usize {
        // a box can go at the end of row i when row i-1 is strictly longer,
        // plus always one new row at the bottom
        1 + (1..self.parts.len())
            .filter(|&i| self.parts[i - 1] > self.parts[i])
            .count()
            + usize::from(!self.parts.is_empty())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n` in descending lexicographic order, `[n]` first and
/// `[1^n]` last. Empty for `n = 0`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Inclusion matrix of `S_n ⊂ S_{n+1}` from the branching rule: rows are the
/// partitions of `n`, columns those of `n + 1`, with a 1 where the column is
/// the row plus one box.
pub fn branching_matrix(n: usize) -> Result<NonNegMatrix, DepthError> {
    let rows = partitions(n);
    let cols = partitions(n + 1);
    let flat: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| cols.iter().map(|c| u64::from(c.covers(r))).collect())
        .collect();
    Ok(NonNegMatrix::from_rows(&flat)?)
}

pub fn sym_depth(n: usize) -> Result<DepthReport, DepthError> {
    depth::min_depth(&branching_matrix(n)?)
}
