use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::cutoff::Cutoffs;
use crate::error::{Error, Result};
use crate::ficombinat::MultiPermutation;
use crate::rational::Q;
use crate::symcore::{ClassFunction, MultiClass, SizeVector};

/// The elements of `S_c̄` with a lookup index.
#[derive(Clone, Debug)]
pub struct GroupElements {
    pub group: SizeVector,
    pub elements: Vec<MultiPermutation>,
    index: HashMap<MultiPermutation, usize>,
}

impl GroupElements {
    pub fn new(group: &SizeVector, cutoffs: &Cutoffs) -> Result<Self> {
        let elements = MultiPermutation::all(group, cutoffs)?;
        let index = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        Ok(GroupElements {
            group: group.clone(),
            elements,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, g: &MultiPermutation) -> Result<usize> {
        self.index.get(g).copied().ok_or_else(|| Error::SizeMismatch {
            expected: format!("an element of S_{}", self.group),
            found: format!("{:?}", g.degrees()),
        })
    }

    fn product(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    /// The subgroup generated by the given element indices, as a sorted set.
    pub fn closure(&self, generators: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let identity = self.index[&MultiPermutation::identity(&self.group)];
        let generators: Vec<usize> = generators.into_iter().collect();
        let mut seen = BTreeSet::from([identity]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for &s in &generators {
                let y = self.product(s, x);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

/// Every subgroup of `S_c̄`, found by closing the cyclic subgroups under
/// joins. Sorted, each given as sorted element indices.
pub fn subgroups(elements: &GroupElements) -> Vec<BTreeSet<usize>> {
    let mut found: BTreeSet<BTreeSet<usize>> = (0..elements.len()).map(|g| elements.closure([g])).collect();
    loop {
        let current: Vec<BTreeSet<usize>> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let join = elements.closure(a.iter().chain(b).copied());
                grew |= found.insert(join);
            }
        }
        if !grew {
            return found.into_iter().collect();
        }
    }
}

/// A finite left `S_c̄`-set. The action of every group element is stored as
/// a permutation of the points `0..len`.
#[derive(Clone, Debug)]
pub struct FiniteGSet {
    elements: GroupElements,
    action: Vec<Vec<usize>>,
}

impl FiniteGSet {
    /// Builds the set from an action function, checking that the identity
    /// acts trivially and that `(gh)·y = g·(h·y)`.
    pub fn from_action_fn(
        group: &SizeVector,
        size: usize,
        cutoffs: &Cutoffs,
        act: impl Fn(&MultiPermutation, usize) -> usize,
    ) -> Result<Self> {
        let elements = GroupElements::new(group, cutoffs)?;
        let mut action = Vec::with_capacity(elements.len());
        for g in &elements.elements {
            let row: Vec<usize> = (0..size).map(|y| act(g, y)).collect();
            if row.iter().any(|&y| y >= size) {
                return Err(Error::NotAGroupAction(format!("{g:?} leaves the set")));
            }
            action.push(row);
        }
        let set = FiniteGSet { elements, action };
        set.check()?;
        Ok(set)
    }

    /// Builds the set from the action of generators, which must generate
    /// `S_c̄`. The action is extended along words; two words for the same
    /// element acting differently is an error.
    pub fn from_generators(
        group: &SizeVector,
        size: usize,
        cutoffs: &Cutoffs,
        generators: &[(MultiPermutation, Vec<usize>)],
    ) -> Result<Self> {
        let elements = GroupElements::new(group, cutoffs)?;
        let mut action: Vec<Option<Vec<usize>>> = vec![None; elements.len()];
        let identity = elements.index_of(&MultiPermutation::identity(group))?;
        action[identity] = Some((0..size).collect());
        let gens = generators
            .iter()
            .map(|(g, row)| {
                if row.len() != size || row.iter().any(|&y| y >= size) {
                    return Err(Error::NotAGroupAction(format!("bad action row for {g:?}")));
                }
                Ok((elements.index_of(g)?, row.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            let row_x = action[x].clone().expect("queued elements have an action");
            for (s, row_s) in &gens {
                let y = elements.product(*s, x);
                let row_y: Vec<usize> = row_x.iter().map(|&p| row_s[p]).collect();
                match &action[y] {
                    Some(existing) if *existing != row_y => {
                        return Err(Error::NotAGroupAction(format!(
                            "{:?} acts in two different ways",
                            elements.elements[y]
                        )))
                    }
                    Some(_) => {}
                    None => {
                        action[y] = Some(row_y);
                        queue.push_back(y);
                    }
                }
            }
        }
        let action = action
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotAGroupAction(format!("generators do not generate S_{group}")))?;
        let set = FiniteGSet { elements, action };
        set.check()?;
        Ok(set)
    }

    fn check(&self) -> Result<()> {
        let identity = self.elements.index[&MultiPermutation::identity(&self.elements.group)];
        if self.action[identity].iter().enumerate().any(|(i, &y)| i != y) {
            return Err(Error::NotAGroupAction("identity moves a point".into()));
        }
        for a in 0..self.elements.len() {
            for b in 0..self.elements.len() {
                let ab = self.elements.product(a, b);
                let compatible = (0..self.len()).all(|y| self.action[ab][y] == self.action[a][self.action[b][y]]);
                if !compatible {
                    return Err(Error::NotAGroupAction(format!(
                        "(gh)y != g(hy) for g={:?}, h={:?}",
                        self.elements.elements[a], self.elements.elements[b]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The one-point set.
    pub fn point(group: &SizeVector, cutoffs: &Cutoffs) -> Result<Self> {
        Self::from_action_fn(group, 1, cutoffs, |_, y| y)
    }

    /// `S_c̄` acting on itself by left multiplication.
    pub fn regular(group: &SizeVector, cutoffs: &Cutoffs) -> Result<Self> {
        let elements = GroupElements::new(group, cutoffs)?;
        let n = elements.len();
        Self::from_action_fn(group, n, cutoffs, |g, y| {
            elements.index[&g.compose(&elements.elements[y])]
        })
    }

    /// Left cosets `S_c̄ / H` for a subgroup `H` given by element indices.
    pub fn cosets(group: &SizeVector, subgroup: &BTreeSet<usize>, cutoffs: &Cutoffs) -> Result<Self> {
        let elements = GroupElements::new(group, cutoffs)?;
        let mut coset_of = vec![usize::MAX; elements.len()];
        let mut count = 0;
        for g in 0..elements.len() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &h in subgroup {
                coset_of[elements.product(g, h)] = count;
            }
            count += 1;
        }
        let reps: Vec<usize> = (0..count)
            .map(|c| {
                coset_of
                    .iter()
                    .position(|&x| x == c)
                    .expect("every coset has an element")
            })
            .collect();
        Self::from_action_fn(group, count, cutoffs, |g, y| {
            coset_of[elements.index[&g.compose(&elements.elements[reps[y]])]]
        })
    }

    /// Cosets of the Young subgroup `S_λ̄`, the stabilizer of the blocks
    /// `{1..λ_1}, {λ_1+1..λ_1+λ_2}, ...` in each coordinate.
    pub fn young(lambda: &MultiClass, cutoffs: &Cutoffs) -> Result<Self> {
        let group = lambda.sizes();
        let elements = GroupElements::new(&group, cutoffs)?;
        let blocks: Vec<Vec<usize>> = lambda
            .coords()
            .iter()
            .map(|p| {
                p.parts()
                    .iter()
                    .enumerate()
                    .flat_map(|(b, &len)| std::iter::repeat_n(b, len))
                    .collect()
            })
            .collect();
        let subgroup = elements
            .elements
            .iter()
            .enumerate()
            .filter(|(_, g)| {
                g.coords()
                    .iter()
                    .zip(&blocks)
                    .all(|(perm, block)| (0..perm.degree()).all(|i| block[perm.apply(i)] == block[i]))
            })
            .map(|(i, _)| i)
            .collect();
        Self::cosets(&group, &subgroup, cutoffs)
    }

    pub fn group(&self) -> &SizeVector {
        &self.elements.group
    }

    pub fn len(&self) -> usize {
        self.action.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn act(&self, g: &MultiPermutation, y: usize) -> Result<usize> {
        Ok(self.action[self.elements.index_of(g)?][y])
    }

    pub(crate) fn elements(&self) -> &GroupElements {
        &self.elements
    }

    pub(crate) fn action_of(&self, g: usize) -> &[usize] {
        &self.action[g]
    }

    /// Character of the permutation module `ℚ[Y]`: fixed points per class.
    pub fn fixed_point_character(&self) -> ClassFunction {
        ClassFunction::from_fn(self.group(), |class| {
            let g = MultiPermutation::of_class(class);
            let row = &self.action[self.elements.index[&g]];
            let fixed = row.iter().enumerate().filter(|(i, y)| i == *y).count();
            Q::from_integer(fixed.into())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ficombinat::Permutation;
    use crate::rational::q;
    use num_traits::Zero;

    fn sv(v: &[usize]) -> SizeVector {
        SizeVector::new(v.to_vec())
    }

    #[test]
    fn subgroup_counts() {
        let c = Cutoffs::default();
        assert_eq!(subgroups(&GroupElements::new(&sv(&[3]), &c).unwrap()).len(), 6);
        assert_eq!(subgroups(&GroupElements::new(&sv(&[4]), &c).unwrap()).len(), 30);
        assert_eq!(subgroups(&GroupElements::new(&sv(&[2, 2]), &c).unwrap()).len(), 5);
    }

    #[test]
    fn regular_character() {
        let y = FiniteGSet::regular(&sv(&[3]), &Cutoffs::default()).unwrap();
        assert_eq!(y.fixed_point_character(), ClassFunction::regular(&sv(&[3])));
        let chi = y.fixed_point_character();
        let identity = crate::symcore::MultiClass::identity(&sv(&[3]));
        assert!(chi
            .entries()
            .into_iter()
            .filter(|(c, _)| *c != identity)
            .all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn generators_extend_or_fail() {
        let g = sv(&[3]);
        let c = Cutoffs::default();
        let swap = MultiPermutation::new(vec![Permutation::new(vec![1, 0, 2]).unwrap()]);
        let rot = MultiPermutation::new(vec![Permutation::new(vec![1, 2, 0]).unwrap()]);
        // sign action on two points
        let y =
            FiniteGSet::from_generators(&g, 2, &c, &[(swap.clone(), vec![1, 0]), (rot.clone(), vec![0, 1])]).unwrap();
        let chi = y.fixed_point_character();
        let value = |parts: Vec<usize>| {
            chi.value(&crate::symcore::MultiClass::from_parts(vec![parts]).unwrap())
                .cloned()
        };
        assert_eq!(value(vec![2, 1]), Some(q(0)));
        assert_eq!(value(vec![3]), Some(q(2)));
        assert_eq!(value(vec![1, 1, 1]), Some(q(2)));
        // a 3-cycle cannot swap two points
        assert!(FiniteGSet::from_generators(&g, 2, &c, &[(swap.clone(), vec![0, 1]), (rot, vec![1, 0])]).is_err());
        // a transposition alone does not generate S_3
        assert!(FiniteGSet::from_generators(&g, 1, &c, &[(swap, vec![0])]).is_err());
    }

    #[test]
    fn bad_action_fn_is_rejected() {
        let err = FiniteGSet::from_action_fn(&sv(&[2]), 2, &Cutoffs::default(), |_, y| 1 - y);
        assert!(matches!(err, Err(Error::NotAGroupAction(_))));
    }

    #[test]
    fn coset_sizes() {
        let c = Cutoffs::default();
        let elements = GroupElements::new(&sv(&[3]), &c).unwrap();
        for h in subgroups(&elements) {
            let y = FiniteGSet::cosets(&sv(&[3]), &h, &c).unwrap();
            assert_eq!(y.len() * h.len(), 6);
        }
    }
}
