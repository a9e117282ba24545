use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::charpoly::CharacterPolynomial;
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::symcore::{decompose, ClassFunction, SizeVector};

/// `χ_{Ind_c̄(V)} = Σ_μ̄ χ_V(μ̄) (X choose μ̄)`.
pub fn ind_character(chi: &ClassFunction) -> CharacterPolynomial {
    let arity = chi.group().arity();
    CharacterPolynomial::from_terms(arity, chi.entries()).expect("classes of one group share its arity")
}

/// One summand `λ · Ind_c̄(V)`, with `V` given by its character on `S_c̄`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Summand {
    pub coeff: Q,
    pub rep: ClassFunction,
}

impl Summand {
    pub fn degree(&self) -> &SizeVector {
        self.rep.group()
    }
}

/// A virtual free module `⊕ λ_i Ind_c̄_i(V_i)`.
///
/// Summands with the same degree and the same character are merged and zero
/// coefficients are dropped, so the summand list is canonical: sorted by
/// degree, then by character values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualFreeModule {
    arity: usize,
    summands: BTreeMap<(SizeVector, Vec<Q>), Q>,
}

impl VirtualFreeModule {
    pub fn zero(arity: usize) -> Self {
        VirtualFreeModule {
            arity,
            summands: BTreeMap::new(),
        }
    }

    /// `Ind_c̄(V)` where `χ_V` lives on `S_c̄`.
    pub fn induced(rep: ClassFunction) -> Self {
        let mut out = Self::zero(rep.group().arity());
        out.push(Q::one(), rep);
        out
    }

    pub fn from_summands(arity: usize, summands: impl IntoIterator<Item = (Q, ClassFunction)>) -> Result<Self> {
        let mut out = Self::zero(arity);
        for (coeff, rep) in summands {
            if rep.group().arity() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: rep.group().arity(),
                });
            }
            out.push(coeff, rep);
        }
        Ok(out)
    }

    fn push(&mut self, coeff: Q, rep: ClassFunction) {
        if coeff.is_zero() || rep.is_zero() {
            return;
        }
        let key = (rep.group().clone(), rep.values().to_vec());
        let entry = self.summands.entry(key.clone()).or_insert_with(Q::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.summands.remove(&key);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn summands(&self) -> Vec<Summand> {
        self.summands
            .iter()
            .map(|((group, values), coeff)| Summand {
                coeff: coeff.clone(),
                rep: ClassFunction::new(group.clone(), values.clone()).expect("stored values fit their group"),
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Coordinatewise maximum of the summand degrees; `0̄` when empty.
    pub fn degree(&self) -> SizeVector {
        self.summands
            .keys()
            .fold(SizeVector::zero(self.arity), |acc, (group, _)| acc.join(group))
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for s in other.summands() {
            out.push(s.coeff, s.rep);
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Q) -> Self {
        let mut out = Self::zero(self.arity);
        for s in self.summands() {
            out.push(s.coeff * factor, s.rep);
        }
        out
    }

    /// The same module with every representation split into irreducibles.
    /// Two modules are isomorphic exactly when these agree.
    pub fn normalize(&self) -> Self {
        let mut out = Self::zero(self.arity);
        for s in self.summands() {
            for (lambda, mult) in decompose(&s.rep) {
                out.push(&s.coeff * mult, ClassFunction::irreducible(&lambda));
            }
        }
        out
    }
}

impl fmt::Display for VirtualFreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        for (i, s) in self.summands().iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*Ind_{}[", s.coeff, s.degree())?;
            for (j, (class, value)) in s.rep.entries().iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{class}:{value}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Character polynomial of a virtual free module, by linearity.
pub fn module_character(module: &VirtualFreeModule) -> CharacterPolynomial {
    module
        .summands()
        .iter()
        .fold(CharacterPolynomial::zero(module.arity()), |acc, s| {
            &acc + &ind_character(&s.rep).scale(&s.coeff)
        })
}

/// A virtual free module whose character is `P`: each indicator
/// `(X choose μ̄)` becomes `Ind_|μ̄|` of the indicator function of `μ̄`.
pub fn categorify(p: &CharacterPolynomial) -> VirtualFreeModule {
    let mut out = VirtualFreeModule::zero(p.arity());
    for (mu, c) in p.terms() {
        out.push(c.clone(), ClassFunction::class_indicator(mu));
    }
    out
}

/// `Ind_c̄(V)^* = Ind_c̄(V^*)`, summand by summand.
pub fn dual(module: &VirtualFreeModule) -> VirtualFreeModule {
    let mut out = VirtualFreeModule::zero(module.arity());
    for s in module.summands() {
        out.push(s.coeff, s.rep.conjugate());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};
    use crate::symcore::{MultiClass, Partition};

    fn sv(v: &[usize]) -> SizeVector {
        SizeVector::new(v.to_vec())
    }

    fn ind(parts: &[usize]) -> CharacterPolynomial {
        CharacterPolynomial::indicator(&MultiClass::single(Partition::new(parts.to_vec()).unwrap()))
    }

    #[test]
    fn small_induction_characters() {
        assert_eq!(ind_character(&ClassFunction::trivial(&sv(&[1]))), ind(&[1]));
        assert_eq!(
            ind_character(&ClassFunction::regular(&sv(&[2]))),
            ind(&[1, 1]).scale(&q(2))
        );
        assert!(ind_character(&ClassFunction::zero(&sv(&[2]))).is_zero());
        assert_eq!(ind_character(&ClassFunction::sign(&sv(&[3]))).degree(), sv(&[3]));
    }

    #[test]
    fn categorify_round_trip() {
        let p = &(&ind(&[2]).scale(&q(3)) - &ind(&[1])) + &ind(&[2, 1]).scale(&q_frac(1, 2));
        let m = categorify(&p);
        assert_eq!(module_character(&m), p);
        let transposition = categorify(&ind(&[2]));
        let want = ClassFunction::trivial(&sv(&[2]))
            .add(&ClassFunction::sign(&sv(&[2])).scale(&q(-1)))
            .unwrap()
            .scale(&q_frac(1, 2));
        assert_eq!(transposition.summands()[0].rep, want);
    }

    #[test]
    fn merging_and_degree() {
        let triv = ClassFunction::trivial(&sv(&[2]));
        let m = VirtualFreeModule::from_summands(1, [(q(1), triv.clone()), (q(2), triv.clone())]).unwrap();
        assert_eq!(m.summands().len(), 1);
        assert_eq!(m.summands()[0].coeff, q(3));
        let z = m.sum(&m.scale(&q(-1))).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), sv(&[0]));
        assert_eq!(dual(&dual(&m)), m);
    }

    #[test]
    fn normalize_splits_regular() {
        let m = VirtualFreeModule::induced(ClassFunction::regular(&sv(&[2])));
        let n = VirtualFreeModule::induced(ClassFunction::trivial(&sv(&[2])))
            .sum(&VirtualFreeModule::induced(ClassFunction::sign(&sv(&[2]))))
            .unwrap();
        assert_ne!(m, n);
        assert_eq!(m.normalize(), n.normalize());
    }
}
