use std::collections::HashMap;

use crate::cutoff::Cutoffs;
use crate::error::{Error, Result};
use crate::symcore::SizeVector;

use super::injection::{enumerate_injections, Injection, MultiInjection};
use super::perm::MultiPermutation;

/// The push-out set `PO_d̄(c̄1, c̄2)`: pairs `(g1, g2)` of morphisms into `d̄`
/// that present `d̄` as a weak push-out of `c̄1` and `c̄2`.
///
/// In `FI^m` every pair of injections is a pullback square over the
/// preimage of the intersection of the images, and that square is a weak
/// push-out exactly when the images jointly cover the target. Orbits of the
/// right `S_c̄1 × S_c̄2` action are precomputed.
#[derive(Clone, Debug)]
pub struct PushoutPairs {
    left: SizeVector,
    right: SizeVector,
    target: SizeVector,
    pairs: Vec<(MultiInjection, MultiInjection)>,
    index: HashMap<(MultiInjection, MultiInjection), usize>,
    orbits: Vec<Vec<usize>>,
}

impl PushoutPairs {
    pub fn left(&self) -> &SizeVector {
        &self.left
    }

    pub fn right(&self) -> &SizeVector {
        &self.right
    }

    pub fn target(&self) -> &SizeVector {
        &self.target
    }

    pub fn pairs(&self) -> &[(MultiInjection, MultiInjection)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Orbits of the right action, each listed by pair index.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn position(&self, pair: &(MultiInjection, MultiInjection)) -> Option<usize> {
        self.index.get(pair).copied()
    }

    /// Index of `(σ ∘ g1, σ ∘ g2)`.
    pub fn act_left(&self, sigma: &MultiPermutation, i: usize) -> usize {
        let (g1, g2) = &self.pairs[i];
        self.index[&(g1.after(sigma), g2.after(sigma))]
    }

    /// Index of `(g1 ∘ h1, g2 ∘ h2)`.
    pub fn act_right(&self, i: usize, h1: &MultiPermutation, h2: &MultiPermutation) -> usize {
        let (g1, g2) = &self.pairs[i];
        self.index[&(g1.before(h1), g2.before(h2))]
    }
}

fn covers(g1: &MultiInjection, g2: &MultiInjection) -> bool {
    g1.coords()
        .iter()
        .zip(g2.coords())
        .all(|(a, b)| (0..a.codomain()).all(|point| a.contains(point) || b.contains(point)))
}

/// Enumerates `PO_d̄(c̄1, c̄2)`. Empty unless
/// `max(c̄1, c̄2) ≤ d̄ ≤ c̄1 + c̄2` coordinatewise.
pub fn pushout_pairs(c1: &SizeVector, c2: &SizeVector, d: &SizeVector, cutoffs: &Cutoffs) -> Result<PushoutPairs> {
    c1.check_arity(d.arity())?;
    c2.check_arity(d.arity())?;
    cutoffs.check_injections(d)?;
    let mut pairs = Vec::new();
    if c1.join(c2).le_all(d) && d.le_all(&(c1 + c2)) {
        let right_maps = enumerate_injections(c2, d, cutoffs)?;
        for g1 in enumerate_injections(c1, d, cutoffs)? {
            for g2 in &right_maps {
                if covers(&g1, g2) {
                    pairs.push((g1.clone(), g2.clone()));
                }
            }
        }
    }
    let index: HashMap<_, _> = pairs.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

    let h1s = MultiPermutation::all(c1, cutoffs)?;
    let h2s = MultiPermutation::all(c2, cutoffs)?;
    let mut seen = vec![false; pairs.len()];
    let mut orbits = Vec::new();
    for start in 0..pairs.len() {
        if seen[start] {
            continue;
        }
        let (g1, g2) = &pairs[start];
        let mut orbit = Vec::new();
        for h1 in &h1s {
            for h2 in &h2s {
                let j = index[&(g1.before(h1), g2.before(h2))];
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(j);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }

    Ok(PushoutPairs {
        left: c1.clone(),
        right: c2.clone(),
        target: d.clone(),
        pairs,
        index,
        orbits,
    })
}

/// Decides whether the square
///
/// ```text
///   p ──f1──▶ c1
///   │         │
///   f2        g1
///   ▼         ▼
///   c2 ──g2─▶ d
/// ```
///
/// is a weak push-out: it must commute, be a pullback (the images of `g1`
/// and `g2` meet exactly in the image of `p`), and the images must cover
/// `d`. Computed on image sets, coordinate by coordinate.
pub fn is_weak_pushout(
    f1: &MultiInjection,
    f2: &MultiInjection,
    g1: &MultiInjection,
    g2: &MultiInjection,
) -> Result<bool> {
    let m = f1.coords().len();
    if [f2, g1, g2].iter().any(|x| x.coords().len() != m) {
        return Err(Error::NotComposable("maps of different arity".into()));
    }
    if f1.source() != f2.source()
        || f1.target() != g1.source()
        || f2.target() != g2.source()
        || g1.target() != g2.target()
    {
        return Err(Error::NotComposable(format!(
            "square p={}→c1={}, p={}→c2={}, c1={}→d={}, c2={}→d={} does not close",
            f1.source(),
            f1.target(),
            f2.source(),
            f2.target(),
            g1.source(),
            g1.target(),
            g2.source(),
            g2.target()
        )));
    }
    let through_left = g1.compose(f1)?;
    if through_left != g2.compose(f2)? {
        return Ok(false);
    }
    for i in 0..m {
        let a = &g1.coords()[i];
        let b = &g2.coords()[i];
        let p_image = through_left.coords()[i].image_set();
        let intersection: Vec<usize> = a.image_set().into_iter().filter(|&x| b.contains(x)).collect();
        if intersection != p_image {
            return Ok(false);
        }
        if (0..a.codomain()).any(|x| !a.contains(x) && !b.contains(x)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A point of `Hom(d̄, x̄) ×_{S_d̄} PO_d̄(c̄1, c̄2)` in normal form: the
/// representative whose map `through: d̄ → x̄` is increasing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FactoredPair {
    pub through: MultiInjection,
    pub left: MultiInjection,
    pub right: MultiInjection,
}

impl FactoredPair {
    /// Moves to the normal form: `[f, (r1, r2)] = [f ∘ g⁻¹, (g ∘ r1, g ∘ r2)]`
    /// with `g ∈ S_d̄` chosen so that `f ∘ g⁻¹` is increasing.
    pub fn normalized(&self) -> FactoredPair {
        let mut through = Vec::new();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..self.through.coords().len() {
            let f = &self.through.coords()[i];
            let sorted = f.image_set();
            let rank: Vec<usize> = f
                .images()
                .iter()
                .map(|x| sorted.binary_search(x).expect("image point"))
                .collect();
            let relabel = |r: &Injection| {
                Injection::new(r.images().iter().map(|&j| rank[j]).collect(), r.codomain())
                    .expect("relabelling by a bijection stays injective")
            };
            left.push(relabel(&self.left.coords()[i]));
            right.push(relabel(&self.right.coords()[i]));
            through.push(Injection::new(sorted, f.codomain()).expect("sorted image set"));
        }
        FactoredPair {
            through: MultiInjection(through),
            left: MultiInjection(left),
            right: MultiInjection(right),
        }
    }
}

/// `Ψ`: `[f, (r1, r2)] ↦ (f ∘ r1, f ∘ r2)`.
pub fn compose_factored(pair: &FactoredPair) -> Result<(MultiInjection, MultiInjection)> {
    Ok((pair.through.compose(&pair.left)?, pair.through.compose(&pair.right)?))
}

/// `Φ`: factors `(f1, f2)` through a weak push-out.
///
/// Forms the pullback `p` of `f1` and `f2`, builds the weak push-out
/// `d̄ = c̄1 ⊔_p c̄2` as a set (the points of `c1`, then the points of `c2`
/// not coming from `p`), takes the induced map `d̄ → x̄` and returns the
/// normal form of the result.
pub fn factor_pair(f1: &MultiInjection, f2: &MultiInjection) -> Result<FactoredPair> {
    if f1.target() != f2.target() {
        return Err(Error::NotComposable(format!(
            "maps land in {} and {}",
            f1.target(),
            f2.target()
        )));
    }
    let mut through = Vec::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (a, b) in f1.coords().iter().zip(f2.coords()) {
        // pullback: alpha1 is the inclusion of p into c1, alpha2 its partner in c2
        let alpha1: Vec<usize> = (0..a.domain()).filter(|&i| b.contains(a.apply(i))).collect();
        let alpha2: Vec<usize> = alpha1
            .iter()
            .map(|&i| b.preimage(a.apply(i)).expect("pullback point"))
            .collect();
        let c1 = a.domain();
        let fresh: Vec<usize> = (0..b.domain()).filter(|j| !alpha2.contains(j)).collect();
        let d = c1 + fresh.len();
        let r1 = Injection::identity(c1);
        let r1 = Injection::new(r1.images().to_vec(), d)?;
        let r2_images = (0..b.domain())
            .map(|j| match alpha2.iter().position(|&x| x == j) {
                Some(t) => alpha1[t],
                None => c1 + fresh.iter().position(|&x| x == j).expect("fresh point"),
            })
            .collect();
        let r2 = Injection::new(r2_images, d)?;
        let f_images = a
            .images()
            .iter()
            .copied()
            .chain(fresh.iter().map(|&j| b.apply(j)))
            .collect();
        through.push(Injection::new(f_images, a.codomain())?);
        left.push(r1);
        right.push(r2);
    }
    Ok(FactoredPair {
        through: MultiInjection(through),
        left: MultiInjection(left),
        right: MultiInjection(right),
    }
    .normalized())
}

/// Normal forms of `⊔_d̄ Hom(d̄, x̄) ×_{S_d̄} PO_d̄(c̄1, c̄2)`.
pub fn factored_pairs(
    c1: &SizeVector,
    c2: &SizeVector,
    x: &SizeVector,
    cutoffs: &Cutoffs,
) -> Result<Vec<FactoredPair>> {
    let lo = c1.join(c2);
    let hi = (c1 + c2).join(&lo);
    let mut out = Vec::new();
    for d in SizeVector::boxed_range(&lo, &hi) {
        if !d.le_all(x) {
            continue;
        }
        let po = pushout_pairs(c1, c2, &d, cutoffs)?;
        if po.is_empty() {
            continue;
        }
        let throughs: Vec<MultiInjection> = enumerate_injections(&d, x, cutoffs)?
            .into_iter()
            .filter(MultiInjection::is_increasing)
            .collect();
        for f in &throughs {
            for (r1, r2) in po.pairs() {
                out.push(FactoredPair {
                    through: f.clone(),
                    left: r1.clone(),
                    right: r2.clone(),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(c: &[usize]) -> SizeVector {
        SizeVector::new(c.to_vec())
    }

    fn inj(images: &[usize], codomain: usize) -> MultiInjection {
        MultiInjection::new(vec![Injection::new(images.to_vec(), codomain).unwrap()])
    }

    #[test]
    fn pushout_set_sizes() {
        let cut = Cutoffs::default();
        assert_eq!(pushout_pairs(&sv(&[1]), &sv(&[1]), &sv(&[1]), &cut).unwrap().len(), 1);
        assert_eq!(pushout_pairs(&sv(&[1]), &sv(&[1]), &sv(&[2]), &cut).unwrap().len(), 2);
        assert_eq!(pushout_pairs(&sv(&[2]), &sv(&[2]), &sv(&[3]), &cut).unwrap().len(), 24);
        assert!(pushout_pairs(&sv(&[1]), &sv(&[1]), &sv(&[3]), &cut).unwrap().is_empty());
    }

    #[test]
    fn right_action_is_free() {
        let po = pushout_pairs(&sv(&[2]), &sv(&[2]), &sv(&[3]), &Cutoffs::default()).unwrap();
        assert!(po.orbits().iter().all(|o| o.len() == 4));
        assert_eq!(po.orbits().len(), 6);
    }

    #[test]
    fn weak_pushout_examples() {
        let id = inj(&[0], 1);
        assert!(is_weak_pushout(&id, &id, &id, &id).unwrap());

        let empty = inj(&[], 1);
        assert!(is_weak_pushout(&empty, &empty, &inj(&[0], 2), &inj(&[1], 2)).unwrap());
        assert!(!is_weak_pushout(&empty, &empty, &inj(&[0], 3), &inj(&[1], 3)).unwrap());
        // commuting but not a pullback: images meet outside p
        assert!(!is_weak_pushout(&empty, &empty, &inj(&[0], 1), &inj(&[0], 1)).unwrap());
        assert!(is_weak_pushout(&empty, &empty, &inj(&[0], 2), &inj(&[1], 3)).is_err());
    }

    #[test]
    fn factoring_round_trip_small() {
        let f1 = inj(&[3, 1], 5);
        let f2 = inj(&[1, 4, 0], 5);
        let factored = factor_pair(&f1, &f2).unwrap();
        assert_eq!(factored.through.target(), sv(&[5]));
        assert_eq!(factored.through.source(), sv(&[4]));
        assert!(factored.through.is_increasing());
        assert_eq!(compose_factored(&factored).unwrap(), (f1, f2));
    }
}
