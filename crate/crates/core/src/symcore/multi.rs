use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::One;

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::rational::factorial;

/// An object `n̄ = (n^(1), ..., n^(m))` of `FI^m`.
///
/// The derived `Ord` is lexicographic and only serves as a canonical sort
/// order. The category's order is coordinatewise; use [`SizeVector::le_all`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SizeVector(pub Vec<usize>);

impl SizeVector {
    pub fn new(coords: Vec<usize>) -> Self {
        SizeVector(coords)
    }

    pub fn zero(m: usize) -> Self {
        SizeVector(vec![0; m])
    }

    pub fn splat(m: usize, value: usize) -> Self {
        SizeVector(vec![value; m])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    /// Coordinatewise `self <= other`.
    pub fn le_all(&self, other: &SizeVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Coordinatewise maximum.
    pub fn join(&self, other: &SizeVector) -> SizeVector {
        SizeVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn scale(&self, k: usize) -> SizeVector {
        SizeVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn plus_each(&self, k: usize) -> SizeVector {
        SizeVector(self.0.iter().map(|a| a + k).collect())
    }

    pub fn max_coord(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `|S_n̄| = prod n^(i)!`.
    pub fn group_order(&self) -> BigUint {
        self.0.iter().fold(BigUint::one(), |acc, &n| acc * factorial(n))
    }

    /// Every `d̄` with `lo <= d̄ <= hi` coordinatewise, in lexicographic order.
    pub fn boxed_range(lo: &SizeVector, hi: &SizeVector) -> Vec<SizeVector> {
        let mut out = vec![Vec::new()];
        for (a, b) in lo.0.iter().zip(&hi.0) {
            let mut next = Vec::new();
            for prefix in &out {
                for v in *a..=*b {
                    let mut ext = prefix.clone();
                    ext.push(v);
                    next.push(ext);
                }
            }
            out = next;
        }
        if lo.0.len() != hi.0.len() || !lo.le_all(hi) {
            return Vec::new();
        }
        out.into_iter().map(SizeVector).collect()
    }

    pub(crate) fn check_arity(&self, m: usize) -> Result<()> {
        if self.arity() != m {
            return Err(Error::ArityMismatch {
                left: m,
                right: self.arity(),
            });
        }
        Ok(())
    }
}

impl Add for &SizeVector {
    type Output = SizeVector;

    fn add(self, rhs: &SizeVector) -> SizeVector {
        SizeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for SizeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An `m`-tuple of partitions.
///
/// Depending on context this is a conjugacy class of `S_n̄`, the index of an
/// irreducible representation of `S_n̄`, or the index of an indicator
/// character polynomial. Ordered by size vector first, then coordinatewise by
/// the canonical partition order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiClass(pub Vec<Partition>);

impl MultiClass {
    pub fn new(coords: Vec<Partition>) -> Self {
        MultiClass(coords)
    }

    pub fn single(p: Partition) -> Self {
        MultiClass(vec![p])
    }

    pub fn empty(m: usize) -> Self {
        MultiClass(vec![Partition::empty(); m])
    }

    /// Parses nested part lists, validating each partition.
    pub fn from_parts(parts: Vec<Vec<usize>>) -> Result<Self> {
        parts
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>>>()
            .map(MultiClass)
    }

    pub fn to_parts(&self) -> Vec<Vec<usize>> {
        self.0.iter().map(|p| p.parts().to_vec()).collect()
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Partition] {
        &self.0
    }

    /// `|μ̄| = (|μ^(1)|, ..., |μ^(m)|)`.
    pub fn sizes(&self) -> SizeVector {
        SizeVector(self.0.iter().map(Partition::size).collect())
    }

    /// `μ̄_1`, the vector of largest parts.
    pub fn first_parts(&self) -> SizeVector {
        SizeVector(self.0.iter().map(Partition::first_part).collect())
    }

    /// The identity class of `S_n̄`.
    pub fn identity(n: &SizeVector) -> Self {
        MultiClass(n.0.iter().map(|&k| Partition::column(k)).collect())
    }

    pub fn centralizer_order(&self) -> BigUint {
        self.0.iter().fold(BigUint::one(), |acc, p| acc * p.centralizer_order())
    }

    pub fn class_size(&self) -> BigUint {
        self.sizes().group_order() / self.centralizer_order()
    }
}

impl Ord for MultiClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sizes().cmp(&other.sizes()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinatewise_order() {
        let a = SizeVector::new(vec![1, 3]);
        let b = SizeVector::new(vec![2, 2]);
        assert!(!a.le_all(&b) && !b.le_all(&a));
        assert!(a.le_all(&a.join(&b)));
        assert_eq!(&a + &b, SizeVector::new(vec![3, 5]));
    }

    #[test]
    fn boxed_range_enumerates_lexicographically() {
        let lo = SizeVector::new(vec![1, 0]);
        let hi = SizeVector::new(vec![2, 1]);
        let all = SizeVector::boxed_range(&lo, &hi);
        assert_eq!(all.len(), 4);
        assert_eq!(all[1], SizeVector::new(vec![1, 1]));
        assert!(SizeVector::boxed_range(&hi, &lo).is_empty());
    }
}
