use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, q_from_uint, Q};
use crate::symcore::{MultiClass, Partition, SizeVector};

use super::poly::CharacterPolynomial;

/// The cycle counter `X_k^(coord)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CycleVar {
    pub coord: usize,
    pub k: usize,
}

/// A monomial: variables with positive exponents.
pub type Monomial = BTreeMap<CycleVar, u32>;

/// A polynomial in the cycle counters `X_k^(i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XkPolynomial {
    arity: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl XkPolynomial {
    pub fn zero(arity: usize) -> Self {
        XkPolynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Q) -> Self {
        let mut out = Self::zero(arity);
        out.add_term(Monomial::new(), c);
        out
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Q::one())
    }

    pub fn variable(arity: usize, coord: usize, k: usize) -> Result<Self> {
        if k == 0 || coord >= arity {
            return Err(Error::Parse(format!(
                "no cycle counter X_{k} in coordinate {coord} of arity {arity}"
            )));
        }
        let mut out = Self::zero(arity);
        out.add_term(Monomial::from([(CycleVar { coord, k }, 1)]), Q::one());
        Ok(out)
    }

    fn add_term(&mut self, mono: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weighted degree with `deg X_k^(i) = k e_i`, maximised coordinatewise.
    pub fn degree(&self) -> SizeVector {
        let mut deg = vec![0; self.arity];
        for mono in self.terms.keys() {
            let mut d = vec![0; self.arity];
            for (v, e) in mono {
                d[v.coord] += v.k * *e as usize;
            }
            for (a, b) in deg.iter_mut().zip(d) {
                *a = (*a).max(b);
            }
        }
        SizeVector::new(deg)
    }

    pub fn add(&self, other: &XkPolynomial) -> Result<XkPolynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &XkPolynomial) -> Result<XkPolynomial> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                for (v, e) in m2 {
                    *m.entry(*v).or_insert(0) += e;
                }
                out.add_term(m, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> XkPolynomial {
        let mut out = Self::zero(self.arity);
        for (m, d) in &self.terms {
            out.add_term(m.clone(), d * c);
        }
        out
    }

    fn check_arity(&self, other: &XkPolynomial) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn eval(&self, nu: &MultiClass) -> Q {
        self.terms.iter().fold(Q::zero(), |acc, (mono, c)| {
            let value = mono.iter().fold(BigInt::one(), |v, (var, e)| {
                v * BigInt::from(nu.coords()[var.coord].multiplicity(var.k)).pow(*e)
            });
            acc + c * Q::from_integer(value)
        })
    }
}

/// `C(x, j)` as a univariate polynomial, coefficients by ascending power.
fn binomial_poly(j: usize) -> Vec<Q> {
    let mut coeffs = vec![Q::one()];
    for t in 0..j {
        let mut next = vec![Q::zero(); coeffs.len() + 1];
        for (p, c) in coeffs.iter().enumerate() {
            next[p + 1] += c;
            next[p] -= c * Q::from_integer(BigInt::from(t));
        }
        coeffs = next;
    }
    let denom = q_from_uint(&factorial(j));
    coeffs.into_iter().map(|c| c / &denom).collect()
}

/// Stirling numbers of the second kind `S(e, j)` for `j ≤ e`.
fn stirling2(e: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for n in 1..=e {
        let mut next = vec![BigInt::zero(); n + 1];
        for j in 1..=n {
            let stay = if j < n {
                &row[j] * BigInt::from(j)
            } else {
                BigInt::zero()
            };
            next[j] = stay + &row[j - 1];
        }
        row = next;
    }
    row
}

/// Rewrites indicators as polynomials in the cycle counters using
/// `(X choose μ̄) = prod_{i,k} C(X_k^(i), m_k(μ^(i)))`.
pub fn to_xk(p: &CharacterPolynomial) -> XkPolynomial {
    let arity = p.arity();
    let mut out = XkPolynomial::zero(arity);
    for (mu, c) in p.terms() {
        let mut term = XkPolynomial::constant(arity, c.clone());
        for (coord, part) in mu.coords().iter().enumerate() {
            for (k, mult) in part.multiplicities() {
                let mut factor = XkPolynomial::zero(arity);
                for (power, b) in binomial_poly(mult).into_iter().enumerate() {
                    let mono = if power == 0 {
                        Monomial::new()
                    } else {
                        Monomial::from([(CycleVar { coord, k }, power as u32)])
                    };
                    factor.add_term(mono, b);
                }
                term = term.mul(&factor).expect("same arity");
            }
        }
        out = out.add(&term).expect("same arity");
    }
    out
}

/// Rewrites a polynomial in the cycle counters in the indicator basis using
/// `x^e = sum_j S(e,j) j! C(x, j)`.
pub fn from_xk(x: &XkPolynomial) -> CharacterPolynomial {
    let arity = x.arity();
    let mut terms: Vec<(MultiClass, Q)> = Vec::new();
    for (mono, c) in x.terms() {
        // Each variable independently picks a multiplicity j.
        let mut partial: Vec<(Vec<Vec<usize>>, Q)> = vec![(vec![Vec::new(); arity], c.clone())];
        for (var, e) in mono {
            let stirling = stirling2(*e as usize);
            let mut next = Vec::new();
            for (parts, coeff) in &partial {
                for (j, s) in stirling.iter().enumerate().skip(1) {
                    let weight = Q::from_integer(s.clone()) * q_from_uint(&factorial(j));
                    let mut parts = parts.clone();
                    parts[var.coord].extend(std::iter::repeat_n(var.k, j));
                    next.push((parts, coeff * weight));
                }
            }
            partial = next;
        }
        terms.extend(partial.into_iter().map(|(parts, coeff)| {
            let class = MultiClass::new(parts.into_iter().map(Partition::from_unsorted).collect());
            (class, coeff)
        }));
    }
    CharacterPolynomial::from_terms(arity, terms).expect("classes built with matching arity")
}

/// Product through the cycle-counter ring. Independent of the solver route
/// and used to cross-check it.
pub fn multiply_via_xk(p: &CharacterPolynomial, q: &CharacterPolynomial) -> Result<CharacterPolynomial> {
    p.check_arity(q)?;
    Ok(from_xk(&to_xk(p).mul(&to_xk(q))?))
}

impl fmt::Display for XkPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (v, e) in mono {
                if self.arity == 1 {
                    write!(f, "*X{}", v.k)?;
                } else {
                    write!(f, "*X{}^({})", v.k, v.coord + 1)?;
                }
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn ind(parts: &[usize]) -> CharacterPolynomial {
        CharacterPolynomial::indicator(&MultiClass::single(Partition::new(parts.to_vec()).unwrap()))
    }

    #[test]
    fn single_cycle_is_a_variable() {
        for k in 1..5 {
            assert_eq!(to_xk(&ind(&[k])), XkPolynomial::variable(1, 0, k).unwrap());
        }
        assert_eq!(to_xk(&CharacterPolynomial::one(1)), XkPolynomial::one(1));
    }

    #[test]
    fn distinct_parts_multiply() {
        let x1 = XkPolynomial::variable(1, 0, 1).unwrap();
        let x2 = XkPolynomial::variable(1, 0, 2).unwrap();
        assert_eq!(to_xk(&ind(&[2, 1])), x2.mul(&x1).unwrap());
    }

    #[test]
    fn repeated_part_is_a_binomial() {
        // C(X1, 2) = X1^2/2 - X1/2
        let x1 = XkPolynomial::variable(1, 0, 1).unwrap();
        let want = x1
            .mul(&x1)
            .unwrap()
            .scale(&crate::rational::q_frac(1, 2))
            .add(&x1.scale(&crate::rational::q_frac(-1, 2)))
            .unwrap();
        assert_eq!(to_xk(&ind(&[1, 1])), want);
    }

    #[test]
    fn stirling_rows() {
        let s: Vec<i64> = stirling2(4).iter().map(|v| i64::try_from(v).unwrap()).collect();
        assert_eq!(s, vec![0, 1, 7, 6, 1]);
        assert_eq!(stirling2(0), vec![BigInt::one()]);
    }

    #[test]
    fn round_trip_and_degree() {
        let p = &(&ind(&[2, 1, 1]).scale(&q(3)) - &ind(&[3])) + &CharacterPolynomial::one(1);
        let x = to_xk(&p);
        assert_eq!(x.degree(), p.degree());
        assert_eq!(from_xk(&x), p);
    }
}
