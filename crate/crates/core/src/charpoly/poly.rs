use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, q_from_uint, Q};
use crate::symcore::{class_table, ClassFunction, MultiClass, Partition, SizeVector};

/// Closed form of the indicator `(X choose μ̄)` on the class `ν̄`:
/// `prod_{i,k} C(X_k^(i)(ν̄), m_k(μ^(i)))`, where `m_k` counts parts equal
/// to `k` and `X_k^(i)(ν̄)` counts `k`-cycles in coordinate `i`.
///
/// # Panics
/// If the two classes have different arity.
pub fn eval_indicator(mu: &MultiClass, nu: &MultiClass) -> Q {
    assert_eq!(mu.arity(), nu.arity(), "indicator and class must have the same arity");
    let mut value = Q::one();
    for (m, n) in mu.coords().iter().zip(nu.coords()) {
        for (k, mult) in m.multiplicities() {
            let b = binomial(n.multiplicity(k), mult);
            if b.is_zero() {
                return Q::zero();
            }
            value *= q_from_uint(&b);
        }
    }
    value
}

/// A character polynomial: a finite rational combination of indicators
/// `(X choose μ̄)`, viewed as a class function on every `S_n̄` at once.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharacterPolynomial {
    arity: usize,
    terms: BTreeMap<MultiClass, Q>,
}

impl CharacterPolynomial {
    pub fn zero(arity: usize) -> Self {
        CharacterPolynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::indicator(&MultiClass::empty(arity))
    }

    pub fn indicator(mu: &MultiClass) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mu.clone(), Q::one());
        CharacterPolynomial {
            arity: mu.arity(),
            terms,
        }
    }

    /// The cycle counter `X_k^(coord)` in arity `arity`.
    pub fn cycle_count(arity: usize, coord: usize, k: usize) -> Self {
        let mut mu = MultiClass::empty(arity);
        mu.0[coord] = Partition::row(k);
        Self::indicator(&mu)
    }

    /// Sums the given terms; zero coefficients are dropped.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (MultiClass, Q)>) -> Result<Self> {
        let mut out = Self::zero(arity);
        for (mu, c) in terms {
            if mu.arity() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: mu.arity(),
                });
            }
            out.add_term(mu, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, mu: MultiClass, c: Q) {
        let entry = self.terms.entry(mu).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<MultiClass, Q> {
        &self.terms
    }

    pub fn coefficient(&self, mu: &MultiClass) -> Q {
        self.terms.get(mu).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coordinatewise maximum of `|μ̄|` over the support. The zero
    /// polynomial has degree `0̄`.
    pub fn degree(&self) -> SizeVector {
        self.terms
            .keys()
            .fold(SizeVector::zero(self.arity), |acc, mu| acc.join(&mu.sizes()))
    }

    pub fn scale(&self, factor: &Q) -> Self {
        if factor.is_zero() {
            return Self::zero(self.arity);
        }
        CharacterPolynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * factor)).collect(),
        }
    }

    pub(crate) fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c.clone());
        }
        Ok(out)
    }

    /// Value on the class `ν̄`.
    pub fn eval(&self, nu: &MultiClass) -> Q {
        self.terms
            .iter()
            .fold(Q::zero(), |acc, (mu, c)| acc + c * eval_indicator(mu, nu))
    }

    /// Restriction to `S_n̄` as a class function.
    pub fn eval_on(&self, group: &SizeVector) -> Result<ClassFunction> {
        group.check_arity(self.arity)?;
        let table = class_table(group);
        let values = table.classes.iter().map(|nu| self.eval(nu)).collect();
        ClassFunction::new(group.clone(), values)
    }

    /// Places an arity-1 polynomial in coordinate `coord` of arity `arity`.
    pub fn embed(&self, arity: usize, coord: usize) -> Result<Self> {
        if self.arity != 1 || coord >= arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: arity,
            });
        }
        let terms = self.terms.iter().map(|(mu, c)| {
            let mut wide = MultiClass::empty(arity);
            wide.0[coord] = mu.coords()[0].clone();
            (wide, c.clone())
        });
        Self::from_terms(arity, terms)
    }

    /// External product `P_1 ⊠ ... ⊠ P_m` of arity-1 polynomials: the
    /// arity-`m` polynomial whose value on `(ν^(1), ..., ν^(m))` is
    /// `prod P_i(ν^(i))`. Indicators multiply into the indicator of the
    /// combined tuple.
    pub fn external_product(factors: &[CharacterPolynomial]) -> Result<Self> {
        let arity = factors.len();
        let mut acc: Vec<(Vec<Partition>, Q)> = vec![(Vec::new(), Q::one())];
        for factor in factors {
            if factor.arity != 1 {
                return Err(Error::ArityMismatch {
                    left: 1,
                    right: factor.arity,
                });
            }
            let mut next = Vec::new();
            for (prefix, c) in &acc {
                for (mu, d) in &factor.terms {
                    let mut ext = prefix.clone();
                    ext.push(mu.coords()[0].clone());
                    next.push((ext, c * d));
                }
            }
            acc = next;
        }
        Self::from_terms(arity, acc.into_iter().map(|(p, c)| (MultiClass(p), c)))
    }
}

impl Add for &CharacterPolynomial {
    type Output = CharacterPolynomial;

    /// # Panics
    /// On arity mismatch; use [`CharacterPolynomial::try_add`] to get an error.
    fn add(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        self.try_add(rhs).expect("arity mismatch in addition")
    }
}

impl Neg for &CharacterPolynomial {
    type Output = CharacterPolynomial;

    fn neg(self) -> CharacterPolynomial {
        self.scale(&-Q::one())
    }
}

impl Sub for &CharacterPolynomial {
    type Output = CharacterPolynomial;

    fn sub(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        self + &(-rhs)
    }
}

impl fmt::Display for CharacterPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mu, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*binom(X,{mu})")?;
        }
        Ok(())
    }
}
