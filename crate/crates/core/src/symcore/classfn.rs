use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::character::character_table;
use super::classes::{class_table, ClassTable};
use super::multi::{MultiClass, SizeVector};
use crate::error::{Error, Result};
use crate::rational::{q_from_uint, Q};

/// An exact rational class function on `S_n̄`, stored densely in canonical
/// class order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ClassFunction {
    group: SizeVector,
    values: Vec<Q>,
}

impl ClassFunction {
    pub fn new(group: SizeVector, values: Vec<Q>) -> Result<Self> {
        let expected = class_table(&group).len();
        if values.len() != expected {
            return Err(Error::SizeMismatch {
                expected: format!("{expected} class values for S_{group}"),
                found: values.len().to_string(),
            });
        }
        Ok(ClassFunction { group, values })
    }

    pub fn from_fn(group: &SizeVector, mut f: impl FnMut(&MultiClass) -> Q) -> Self {
        let values = class_table(group).classes.iter().map(&mut f).collect();
        ClassFunction {
            group: group.clone(),
            values,
        }
    }

    pub fn zero(group: &SizeVector) -> Self {
        Self::from_fn(group, |_| Q::zero())
    }

    pub fn trivial(group: &SizeVector) -> Self {
        Self::from_fn(group, |_| Q::one())
    }

    /// Product of the sign characters of the coordinates.
    pub fn sign(group: &SizeVector) -> Self {
        Self::from_fn(group, |c| {
            let odd: usize = c.coords().iter().map(|p| p.size() - p.len()).sum();
            if odd.is_multiple_of(2) {
                Q::one()
            } else {
                -Q::one()
            }
        })
    }

    /// Character of the regular representation: `|G|` at the identity.
    pub fn regular(group: &SizeVector) -> Self {
        let id = MultiClass::identity(group);
        let order = q_from_uint(&group.group_order());
        Self::from_fn(group, |c| if *c == id { order.clone() } else { Q::zero() })
    }

    /// 1 on the class `mu`, 0 elsewhere.
    pub fn class_indicator(mu: &MultiClass) -> Self {
        Self::from_fn(&mu.sizes(), |c| if c == mu { Q::one() } else { Q::zero() })
    }

    /// Irreducible character `χ_λ̄` on `S_|λ̄|`.
    pub fn irreducible(lambda: &MultiClass) -> Self {
        let group = lambda.sizes();
        let table = character_table(&group);
        let row = table
            .irreducibles
            .iter()
            .position(|l| l == lambda)
            .expect("every multipartition of the group size labels an irreducible");
        let values = table.values[row].iter().map(|v| Q::from_integer(v.clone())).collect();
        ClassFunction { group, values }
    }

    pub fn group(&self) -> &SizeVector {
        &self.group
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn table(&self) -> Arc<ClassTable> {
        class_table(&self.group)
    }

    pub fn value(&self, class: &MultiClass) -> Option<&Q> {
        self.table().index_of(class).map(|i| &self.values[i])
    }

    /// `(class, value)` pairs in canonical order.
    pub fn entries(&self) -> Vec<(MultiClass, Q)> {
        self.table()
            .classes
            .iter()
            .cloned()
            .zip(self.values.iter().cloned())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    fn check_group(&self, other: &ClassFunction) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                left: self.group.to_string(),
                right: other.group.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ClassFunction {
            group: self.group.clone(),
            values,
        })
    }

    pub fn scale(&self, factor: &Q) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn pointwise_mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(ClassFunction {
            group: self.group.clone(),
            values,
        })
    }

    /// Complex conjugate `g ↦ conj(χ(g)) = χ(g⁻¹)`.
    ///
    /// An element and its inverse share a cycle type and all values are
    /// rational, so the values come back unchanged; the operation still exists
    /// so that duals are expressed through it.
    pub fn conjugate(&self) -> ClassFunction {
        let table = self.table();
        let values = table
            .classes
            .iter()
            .map(|c| {
                let inverse_class = c.clone();
                self.values[table.index_of(&inverse_class).expect("class of the inverse")].clone()
            })
            .collect();
        ClassFunction {
            group: self.group.clone(),
            values,
        }
    }

    /// Average of the function over the group.
    pub fn mean(&self) -> Q {
        let table = self.table();
        let total = self
            .values
            .iter()
            .zip(&table.sizes)
            .fold(Q::zero(), |acc, (v, s)| acc + v * q_from_uint(s));
        total / q_from_uint(&table.order)
    }
}

/// `⟨f, g⟩ = (1/|G|) Σ_classes |class| f(μ) conj(g(μ))`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Q> {
    Ok(f.pointwise_mul(&g.conjugate())?.mean())
}

/// Coefficients of `f` in the basis of irreducible characters. Zero
/// coefficients are omitted.
pub fn decompose(f: &ClassFunction) -> BTreeMap<MultiClass, Q> {
    let table = character_table(f.group());
    let classes = f.table();
    let order = q_from_uint(&classes.order);
    let mut out = BTreeMap::new();
    for (lambda, row) in table.irreducibles.iter().zip(&table.values) {
        let total = f
            .values()
            .iter()
            .zip(row)
            .zip(&classes.sizes)
            .fold(Q::zero(), |acc, ((v, chi), size)| {
                acc + v * Q::from_integer(chi * BigInt::from(size.clone()))
            });
        let coefficient = total / &order;
        if !coefficient.is_zero() {
            out.insert(lambda.clone(), coefficient);
        }
    }
    out
}

/// `Σ c_λ̄ χ_λ̄` on the given group.
pub fn reconstruct(group: &SizeVector, coefficients: &BTreeMap<MultiClass, Q>) -> Result<ClassFunction> {
    let mut acc = ClassFunction::zero(group);
    for (lambda, c) in coefficients {
        if lambda.sizes() != *group {
            return Err(Error::SizeMismatch {
                expected: group.to_string(),
                found: lambda.sizes().to_string(),
            });
        }
        acc = acc.add(&ClassFunction::irreducible(lambda).scale(c))?;
    }
    Ok(acc)
}
