use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;

use super::multi::{MultiClass, SizeVector};
use super::partition::partitions_of;
use crate::memo::Memo;

/// Conjugacy classes of `S_n̄` in canonical order, with their sizes.
#[derive(Debug)]
pub struct ClassTable {
    pub group: SizeVector,
    pub classes: Vec<MultiClass>,
    pub sizes: Vec<BigUint>,
    pub order: BigUint,
    index: HashMap<MultiClass, usize>,
}

impl ClassTable {
    fn build(group: &SizeVector) -> Self {
        let mut classes = vec![Vec::new()];
        for &n in group.coords() {
            let parts = partitions_of(n);
            classes = classes
                .into_iter()
                .flat_map(|prefix| {
                    parts.iter().map(move |p| {
                        let mut ext = prefix.clone();
                        ext.push(p.clone());
                        ext
                    })
                })
                .collect();
        }
        let classes: Vec<MultiClass> = classes.into_iter().map(MultiClass).collect();
        let sizes = classes.iter().map(MultiClass::class_size).collect();
        let index = classes.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        ClassTable {
            group: group.clone(),
            classes,
            sizes,
            order: group.group_order(),
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn index_of(&self, class: &MultiClass) -> Option<usize> {
        self.index.get(class).copied()
    }
}

fn table_memo() -> &'static Memo<SizeVector, ClassTable> {
    static MEMO: OnceLock<Memo<SizeVector, ClassTable>> = OnceLock::new();
    MEMO.get_or_init(Memo::new)
}

/// Memoized class table of `S_n̄`.
pub fn class_table(group: &SizeVector) -> Arc<ClassTable> {
    table_memo().get_or_insert_with(group, || ClassTable::build(group))
}

/// Conjugacy classes of `S_n̄`: the Cartesian product of the partitions of
/// each coordinate, lexicographic in the canonical partition order.
pub fn conjugacy_classes(group: &SizeVector) -> Vec<MultiClass> {
    class_table(group).classes.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn class_counts() {
        assert_eq!(conjugacy_classes(&SizeVector::new(vec![2, 2])).len(), 4);
        assert_eq!(conjugacy_classes(&SizeVector::new(vec![3])).len(), 3);
        assert_eq!(conjugacy_classes(&SizeVector::new(vec![4, 3])).len(), 15);
        assert_eq!(conjugacy_classes(&SizeVector::new(vec![0])).len(), 1);
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for group in [vec![5], vec![3, 4], vec![2, 0, 3], vec![7]] {
            let table = class_table(&SizeVector::new(group));
            let total = table.sizes.iter().fold(BigUint::zero(), |a, b| a + b);
            assert_eq!(total, table.order);
        }
    }

    #[test]
    fn canonical_order_is_sorted() {
        let table = class_table(&SizeVector::new(vec![3, 2]));
        assert!(table.classes.windows(2).all(|w| w[0] < w[1]));
        for (i, c) in table.classes.iter().enumerate() {
            assert_eq!(table.index_of(c), Some(i));
        }
    }
}
