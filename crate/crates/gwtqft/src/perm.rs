//! Minimal permutation arithmetic for the brute-force cross checks.
//!
//! Everything here stays crate-private: the public API speaks in cycle
//! types (partitions), and permutations only appear inside enumeration
//! oracles kept deliberately naive.

use crate::partitions::Partition;

/// A permutation of {0, .., d-1} in one-line notation: `images[x]` is the
/// image of x.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm {
            images: (0..d).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Composition acting left to right on points: (self . other)(x) =
    /// self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Perm { images }
    }

    /// The commutator self other self^{-1} other^{-1}.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.compose(other)
            .compose(&self.inverse())
            .compose(&other.inverse())
    }

    /// Cycle type as a partition of the degree.
    pub fn cycle_type(&self) -> Partition {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut lengths = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::new(lengths).expect("cycle lengths are positive")
    }

    /// A canonical permutation with the given cycle type: consecutive
    /// points are grouped into cycles, largest part first.
    pub fn with_cycle_type(alpha: &Partition) -> Perm {
        let d = alpha.size();
        let mut images: Vec<usize> = (0..d).collect();
        let mut base = 0;
        for &part in alpha.parts() {
            for offset in 0..part {
                images[base + offset] = base + (offset + 1) % part;
            }
            base += part;
        }
        Perm { images }
    }

    /// Every permutation of degree d, in lexicographic one-line order.
    pub fn all(d: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut chosen = vec![false; d];
        let mut prefix = Vec::with_capacity(d);
        build(d, &mut chosen, &mut prefix, &mut out);
        out
    }

    /// Every permutation of degree d whose cycle type is `alpha`, in
    /// lexicographic one-line order.
    pub fn class(alpha: &Partition) -> Vec<Perm> {
        Perm::all(alpha.size())
            .into_iter()
            .filter(|g| &g.cycle_type() == alpha)
            .collect()
    }
}

fn build(d: usize, chosen: &mut Vec<bool>, prefix: &mut Vec<usize>, out: &mut Vec<Perm>) {
    if prefix.len() == d {
        out.push(Perm {
            images: prefix.clone(),
        });
        return;
    }
    for x in 0..d {
        if !chosen[x] {
            chosen[x] = true;
            prefix.push(x);
            build(d, chosen, prefix, out);
            prefix.pop();
            chosen[x] = false;
        }
    }
}
