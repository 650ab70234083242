//! Integer partitions and the combinatorial quantities attached to them.
//!
//! Partitions label both the conjugacy classes and the irreducible
//! representations of symmetric groups, and every tensor in the TQFT layer
//! is indexed by the canonical enumeration order fixed here: partitions of
//! d are listed in reverse-lexicographic order, so `(d)` comes first and
//! `(1, ..., 1)` last. All index bookkeeping downstream relies on that
//! order, so it is part of this module's contract.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of a nonnegative integer: a weakly decreasing list of
/// positive parts. The empty partition (of 0) is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build a partition from parts in any order; they are sorted into the
    /// canonical weakly decreasing form. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be at least 1".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number d being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The number of parts, usually written l(alpha).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part multiplicities as (part, count) pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Order of the centralizer of a permutation with this cycle type:
    /// z(alpha) = prod_k k^{m_k} m_k! over the multiplicities m_k.
    ///
    /// The class of cycle type alpha in S_d has d!/z(alpha) elements.
    pub fn centralizer_order(&self) -> u64 {
        self.multiplicities()
            .into_iter()
            .map(|(part, mult)| (part as u64).pow(mult as u32) * factorial(mult))
            .product()
    }

    /// Number of elements of the conjugacy class with this cycle type.
    pub fn class_size(&self) -> u64 {
        factorial(self.size()) / self.centralizer_order()
    }

    /// Dimension of the irreducible S_d representation labelled by this
    /// partition, via the hook length formula: d! / prod(hooks).
    pub fn hook_dimension(&self) -> u64 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j) + (conj.parts[j] - i) - 1;
                hooks *= hook as u128;
            }
        }
        (factorial(self.size()) as u128 / hooks) as u64
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated positive integers, e.g. `2,1`. Whitespace
    /// around entries is ignored and the result is canonicalized.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {piece:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of d in the canonical reverse-lexicographic order:
/// `(d)` first, `(1,...,1)` last. `enumerate(0)` is the single empty
/// partition.
pub fn enumerate(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fill(d, d, &mut prefix, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        fill(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// The partition count p(d).
pub fn count(d: usize) -> usize {
    enumerate(d).len()
}

/// n! as a u64; callers stay below n = 20 where this is exact.
pub fn factorial(n: usize) -> u64 {
    assert!(n <= 20, "factorial({n}) overflows u64");
    (1..=n as u64).product()
}
