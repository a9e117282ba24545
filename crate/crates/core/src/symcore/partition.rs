use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::rational::factorial;

/// A weakly decreasing sequence of positive integers.
///
/// Partitions of `n` index both the conjugacy classes (cycle types) and the
/// irreducible representations of `S_n`. The empty partition is the unique
/// partition of 0.
///
/// The total order is the canonical one used everywhere in the crate: by size
/// first, then descending lexicographic, so the partitions of 3 sort as
/// `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, or the empty partition when `n == 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column partition `(1,...,1)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// `(part, multiplicity)` pairs in increasing order of part.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_mu = prod_k k^{m_k} m_k!`, the order of the centralizer of an element
    /// of cycle type `self`.
    pub fn centralizer_order(&self) -> BigUint {
        self.multiplicities().into_iter().fold(BigUint::one(), |acc, (k, m)| {
            acc * BigUint::from(k).pow(m as u32) * factorial(m)
        })
    }

    /// Whether the multiset of parts of `self` is contained in that of `other`.
    pub fn is_submultiset_of(&self, other: &Partition) -> bool {
        self.multiplicities()
            .into_iter()
            .all(|(k, m)| other.multiplicity(k) >= m)
    }

    /// Appends the parts of `other` and re-sorts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part();
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
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

fn partition_memo() -> &'static Memo<usize, Vec<Partition>> {
    static MEMO: OnceLock<Memo<usize, Vec<Partition>>> = OnceLock::new();
    MEMO.get_or_init(Memo::new)
}

/// All partitions of `n`, each exactly once, in descending lexicographic order.
pub fn partitions_of(n: usize) -> Arc<Vec<Partition>> {
    partition_memo().get_or_insert_with(&n, || {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n, n, &mut current, &mut out);
        out
    })
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Centralizer order `z_mu` and class size `n!/z_mu` for the cycle type `mu`.
pub fn class_data(mu: &Partition, n: usize) -> Result<(BigUint, BigUint)> {
    if mu.size() != n {
        return Err(Error::SizeMismatch {
            expected: n.to_string(),
            found: mu.size().to_string(),
        });
    }
    let z = mu.centralizer_order();
    let size = factorial(n) / &z;
    Ok((z, size))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn canonical_order_of_small_partitions() {
        assert_eq!(*partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            *partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        let parts = partitions_of(6);
        assert!(parts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn class_sizes() {
        let (_, size) = class_data(&Partition::column(5), 5).unwrap();
        assert_eq!(size, BigUint::from(1u32));
        let (_, size) = class_data(&p(&[5]), 5).unwrap();
        assert_eq!(size, BigUint::from(24u32));
        let (z, size) = class_data(&p(&[2, 1]), 3).unwrap();
        assert_eq!((z, size), (BigUint::from(2u32), BigUint::from(3u32)));
        assert!(class_data(&p(&[2, 1]), 4).is_err());
    }

    #[test]
    fn multiplicity_helpers() {
        let mu = p(&[3, 2, 2, 1]);
        assert_eq!(mu.multiplicities(), vec![(1, 1), (2, 2), (3, 1)]);
        assert!(p(&[2, 1]).is_submultiset_of(&mu));
        assert!(!p(&[1, 1]).is_submultiset_of(&mu));
        assert_eq!(mu.conjugate(), p(&[4, 3, 1]));
        assert_eq!(p(&[2]).union(&p(&[3, 1])), p(&[3, 2, 1]));
    }
}
