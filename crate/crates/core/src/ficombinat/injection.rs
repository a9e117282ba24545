use crate::cutoff::Cutoffs;
use crate::error::{Error, Result};
use crate::symcore::SizeVector;

use super::perm::{MultiPermutation, Permutation};

/// An injective map `{0..c-1} → {0..d-1}`, stored as its list of images.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Injection {
    codomain: usize,
    images: Vec<usize>,
}

impl Injection {
    pub fn new(images: Vec<usize>, codomain: usize) -> Result<Self> {
        let mut seen = vec![false; codomain];
        for &i in &images {
            if i >= codomain || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInjection { images, codomain });
            }
        }
        Ok(Injection { codomain, images })
    }

    pub fn identity(n: usize) -> Self {
        Injection {
            codomain: n,
            images: (0..n).collect(),
        }
    }

    pub fn domain(&self) -> usize {
        self.images.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Sorted image set.
    pub fn image_set(&self) -> Vec<usize> {
        let mut set = self.images.clone();
        set.sort_unstable();
        set
    }

    pub fn contains(&self, point: usize) -> bool {
        self.images.contains(&point)
    }

    pub fn preimage(&self, point: usize) -> Option<usize> {
        self.images.iter().position(|&i| i == point)
    }

    pub fn is_increasing(&self) -> bool {
        self.images.windows(2).all(|w| w[0] < w[1])
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Injection) -> Result<Injection> {
        if inner.codomain != self.domain() {
            return Err(Error::NotComposable(format!(
                "inner map lands in {} points, outer map starts from {}",
                inner.codomain,
                self.domain()
            )));
        }
        Ok(Injection {
            codomain: self.codomain,
            images: inner.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    /// `σ ∘ self`.
    pub fn after(&self, sigma: &Permutation) -> Injection {
        Injection {
            codomain: self.codomain,
            images: self.images.iter().map(|&i| sigma.apply(i)).collect(),
        }
    }

    /// `self ∘ g`.
    pub fn before(&self, g: &Permutation) -> Injection {
        Injection {
            codomain: self.codomain,
            images: g.images().iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// All injections `c → d` in lexicographic order of image lists.
    pub fn all(c: usize, d: usize) -> Vec<Injection> {
        let mut out = Vec::new();
        let mut used = vec![false; d];
        let mut current = Vec::with_capacity(c);
        extend(c, d, &mut used, &mut current, &mut out);
        out
    }

    /// Increasing injections `c → d`, one per `c`-subset.
    pub fn increasing(c: usize, d: usize) -> Vec<Injection> {
        Injection::all(c, d)
            .into_iter()
            .filter(Injection::is_increasing)
            .collect()
    }
}

fn extend(c: usize, d: usize, used: &mut [bool], current: &mut Vec<usize>, out: &mut Vec<Injection>) {
    if current.len() == c {
        out.push(Injection {
            codomain: d,
            images: current.clone(),
        });
        return;
    }
    for i in 0..d {
        if !used[i] {
            used[i] = true;
            current.push(i);
            extend(c, d, used, current, out);
            current.pop();
            used[i] = false;
        }
    }
}

/// A morphism `c̄ → d̄` of `FI^m`: one injection per coordinate.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct MultiInjection(pub Vec<Injection>);

impl MultiInjection {
    pub fn new(coords: Vec<Injection>) -> Self {
        MultiInjection(coords)
    }

    pub fn identity(n: &SizeVector) -> Self {
        MultiInjection(n.coords().iter().map(|&k| Injection::identity(k)).collect())
    }

    pub fn coords(&self) -> &[Injection] {
        &self.0
    }

    pub fn source(&self) -> SizeVector {
        SizeVector::new(self.0.iter().map(Injection::domain).collect())
    }

    pub fn target(&self) -> SizeVector {
        SizeVector::new(self.0.iter().map(Injection::codomain).collect())
    }

    pub fn compose(&self, inner: &MultiInjection) -> Result<MultiInjection> {
        if self.0.len() != inner.0.len() {
            return Err(Error::ArityMismatch {
                left: self.0.len(),
                right: inner.0.len(),
            });
        }
        self.0
            .iter()
            .zip(&inner.0)
            .map(|(a, b)| a.compose(b))
            .collect::<Result<Vec<_>>>()
            .map(MultiInjection)
    }

    /// `σ ∘ self`.
    pub fn after(&self, sigma: &MultiPermutation) -> MultiInjection {
        MultiInjection(self.0.iter().zip(sigma.coords()).map(|(f, s)| f.after(s)).collect())
    }

    /// `self ∘ g`.
    pub fn before(&self, g: &MultiPermutation) -> MultiInjection {
        MultiInjection(self.0.iter().zip(g.coords()).map(|(f, h)| f.before(h)).collect())
    }

    pub fn is_increasing(&self) -> bool {
        self.0.iter().all(Injection::is_increasing)
    }

    pub fn image_sets(&self) -> Vec<Vec<usize>> {
        self.0.iter().map(Injection::image_set).collect()
    }
}

fn product<T: Clone>(factors: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for factor in factors {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<T>| {
                factor.iter().map(move |x| {
                    let mut ext = prefix.clone();
                    ext.push(x.clone());
                    ext
                })
            })
            .collect();
    }
    out
}

/// `Hom(c̄, d̄)` in canonical order; empty unless `c̄ ≤ d̄`.
pub fn enumerate_injections(c: &SizeVector, d: &SizeVector, cutoffs: &Cutoffs) -> Result<Vec<MultiInjection>> {
    c.check_arity(d.arity())?;
    cutoffs.check_injections(d)?;
    if !c.le_all(d) {
        return Ok(Vec::new());
    }
    let factors = c
        .coords()
        .iter()
        .zip(d.coords())
        .map(|(&a, &b)| Injection::all(a, b))
        .collect();
    Ok(product(factors).into_iter().map(MultiInjection).collect())
}

/// The binomial set `(d̄ choose c̄)`: one representative per right
/// `S_c̄`-orbit of injections.
///
/// In `FI^m` an orbit is determined by its tuple of image subsets; the
/// representative returned is the increasing injection onto those subsets.
pub fn binomial_set(c: &SizeVector, d: &SizeVector, cutoffs: &Cutoffs) -> Result<Vec<MultiInjection>> {
    c.check_arity(d.arity())?;
    cutoffs.check_injections(d)?;
    if !c.le_all(d) {
        return Ok(Vec::new());
    }
    let factors = c
        .coords()
        .iter()
        .zip(d.coords())
        .map(|(&a, &b)| Injection::increasing(a, b))
        .collect();
    Ok(product(factors).into_iter().map(MultiInjection).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(c: &[usize]) -> SizeVector {
        SizeVector::new(c.to_vec())
    }

    #[test]
    fn injection_counts() {
        let cut = Cutoffs::default();
        assert_eq!(enumerate_injections(&sv(&[0]), &sv(&[5]), &cut).unwrap().len(), 1);
        assert_eq!(enumerate_injections(&sv(&[2]), &sv(&[4]), &cut).unwrap().len(), 12);
        assert_eq!(
            enumerate_injections(&sv(&[1, 2]), &sv(&[2, 3]), &cut).unwrap().len(),
            12
        );
        assert!(enumerate_injections(&sv(&[3]), &sv(&[2]), &cut).unwrap().is_empty());
        assert!(matches!(
            enumerate_injections(&sv(&[1]), &sv(&[9]), &cut),
            Err(Error::CutoffExceeded { .. })
        ));
    }

    #[test]
    fn binomial_set_sizes() {
        let cut = Cutoffs::default();
        assert_eq!(binomial_set(&sv(&[2]), &sv(&[5]), &cut).unwrap().len(), 10);
        assert_eq!(binomial_set(&sv(&[3, 2]), &sv(&[3, 2]), &cut).unwrap().len(), 1);
        assert_eq!(binomial_set(&sv(&[1, 1]), &sv(&[2, 2]), &cut).unwrap().len(), 4);
    }

    #[test]
    fn composition_checks_shapes() {
        let f = Injection::new(vec![2, 0], 3).unwrap();
        let g = Injection::new(vec![1], 2).unwrap();
        assert_eq!(f.compose(&g).unwrap().images(), &[0]);
        assert!(g.compose(&f).is_err());
        assert!(Injection::new(vec![1, 1], 3).is_err());
        assert!(Injection::new(vec![3], 3).is_err());
    }
}
