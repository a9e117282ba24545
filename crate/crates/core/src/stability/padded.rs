use std::fmt;

use crate::error::{Error, Result};
use crate::symcore::{MultiClass, Partition, SizeVector};

/// The family `d̄ ↦ λ̄(d̄)` of padded multipartitions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PaddedPartitionFamily {
    base: MultiClass,
    stable_from: SizeVector,
}

impl PaddedPartitionFamily {
    pub fn new(base: MultiClass) -> Self {
        let stable_from = &base.sizes() + &base.first_parts();
        PaddedPartitionFamily { base, stable_from }
    }

    pub fn base(&self) -> &MultiClass {
        &self.base
    }

    /// Smallest `d̄` at which padding gives a partition: `|λ̄| + λ̄_1`.
    pub fn stable_from(&self) -> &SizeVector {
        &self.stable_from
    }

    /// `λ̄(d̄)`, prepending `d - |λ|` to each coordinate.
    pub fn at(&self, d: &SizeVector) -> Result<MultiClass> {
        d.check_arity(self.base.arity())?;
        if !self.stable_from.le_all(d) {
            return Err(Error::BelowStableRange {
                family: self.base.to_string(),
                size: d.to_string(),
                needed: self.stable_from.to_string(),
            });
        }
        let coords = self
            .base
            .coords()
            .iter()
            .zip(d.coords())
            .map(|(lambda, &n)| {
                let mut parts = vec![n - lambda.size()];
                parts.extend_from_slice(lambda.parts());
                parts.retain(|&p| p > 0);
                Partition::new(parts)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiClass::new(coords))
    }
}

impl fmt::Display for PaddedPartitionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(d)", self.base)
    }
}

/// `λ̄(d̄)`.
pub fn pad(lambda: &MultiClass, d: &SizeVector) -> Result<MultiClass> {
    PaddedPartitionFamily::new(lambda.clone()).at(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(parts: &[usize]) -> MultiClass {
        MultiClass::single(Partition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn padding() {
        let d = |n| SizeVector::new(vec![n]);
        assert_eq!(pad(&single(&[]), &d(5)).unwrap(), single(&[5]));
        assert_eq!(pad(&single(&[1]), &d(4)).unwrap(), single(&[3, 1]));
        assert_eq!(pad(&single(&[2, 1]), &d(5)).unwrap(), single(&[2, 2, 1]));
        assert!(matches!(
            pad(&single(&[2, 1]), &d(3)),
            Err(Error::BelowStableRange { .. })
        ));
        assert_eq!(pad(&single(&[]), &d(0)).unwrap(), single(&[]));
    }

    #[test]
    fn multi_padding() {
        let lambda = MultiClass::from_parts(vec![vec![1], vec![]]).unwrap();
        let family = PaddedPartitionFamily::new(lambda);
        assert_eq!(family.stable_from(), &SizeVector::new(vec![2, 0]));
        let at = family.at(&SizeVector::new(vec![3, 2])).unwrap();
        assert_eq!(at, MultiClass::from_parts(vec![vec![2, 1], vec![2]]).unwrap());
    }
}
