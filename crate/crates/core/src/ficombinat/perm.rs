use std::fmt;

use crate::cutoff::Cutoffs;
use crate::error::{Error, Result};
use crate::symcore::{MultiClass, Partition, SizeVector};

/// A permutation of `{0, ..., n-1}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(images));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The standard element of cycle type `mu`: consecutive blocks
    /// `(0 1 .. m1-1)(m1 ..)...`.
    pub fn of_cycle_type(mu: &Partition) -> Self {
        let mut images = Vec::with_capacity(mu.size());
        let mut start = 0;
        for &len in mu.parts() {
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.0[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (0..n).collect();
        let mut out = vec![Permutation(current.clone())];
        while next_permutation(&mut current) {
            out.push(Permutation(current.clone()));
        }
        out
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An element of `S_n̄ = S_n(1) × ... × S_n(m)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct MultiPermutation(pub Vec<Permutation>);

impl MultiPermutation {
    pub fn new(coords: Vec<Permutation>) -> Self {
        MultiPermutation(coords)
    }

    pub fn identity(n: &SizeVector) -> Self {
        MultiPermutation(n.coords().iter().map(|&k| Permutation::identity(k)).collect())
    }

    /// The standard representative of the class `mu`.
    pub fn of_class(mu: &MultiClass) -> Self {
        MultiPermutation(mu.coords().iter().map(Permutation::of_cycle_type).collect())
    }

    pub fn coords(&self) -> &[Permutation] {
        &self.0
    }

    pub fn degrees(&self) -> SizeVector {
        SizeVector::new(self.0.iter().map(Permutation::degree).collect())
    }

    pub fn compose(&self, other: &MultiPermutation) -> MultiPermutation {
        MultiPermutation(self.0.iter().zip(&other.0).map(|(a, b)| a.compose(b)).collect())
    }

    pub fn inverse(&self) -> MultiPermutation {
        MultiPermutation(self.0.iter().map(Permutation::inverse).collect())
    }

    pub fn cycle_type(&self) -> MultiClass {
        MultiClass::new(self.0.iter().map(Permutation::cycle_type).collect())
    }

    /// Every element of `S_n̄`, lexicographic by coordinate.
    pub fn all(n: &SizeVector, cutoffs: &Cutoffs) -> Result<Vec<MultiPermutation>> {
        cutoffs.check_elements(n)?;
        let mut out = vec![Vec::new()];
        for &k in n.coords() {
            let perms = Permutation::all(k);
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Permutation>| {
                    perms.iter().map(move |p| {
                        let mut ext = prefix.clone();
                        ext.push(p.clone());
                        ext
                    })
                })
                .collect();
        }
        Ok(out.into_iter().map(MultiPermutation).collect())
    }

    /// Every element of the class `mu`.
    pub fn all_in_class(mu: &MultiClass, cutoffs: &Cutoffs) -> Result<Vec<MultiPermutation>> {
        Ok(Self::all(&mu.sizes(), cutoffs)?
            .into_iter()
            .filter(|g| g.cycle_type() == *mu)
            .collect())
    }
}
