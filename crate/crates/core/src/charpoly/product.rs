use crate::error::Result;
use crate::symcore::SizeVector;

use super::basis::{fit, verify_on};
use super::poly::CharacterPolynomial;

impl CharacterPolynomial {
    /// Product of two character polynomials.
    ///
    /// The pointwise product is sampled on every class of every `S_d̄` with
    /// `d̄ ≤ deg P + deg Q` and expanded in indicators by an exact solve. The
    /// expansion is then checked on `S_{D̄+1̄}` and `S_{D̄+2̄}`; any failure is
    /// an error, never an approximation.
    pub fn multiply(&self, other: &CharacterPolynomial) -> Result<CharacterPolynomial> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(CharacterPolynomial::zero(self.arity()));
        }
        let bound = &self.degree() + &other.degree();
        let product = |nu: &_| self.eval(nu) * other.eval(nu);
        let result = fit(&bound, product, "product expansion")?;
        for extra in 1..=2 {
            verify_on(&result, &bound.plus_each(extra), product, "product expansion")?;
        }
        Ok(result)
    }

    /// `self^k`, with `P^0 = 1`.
    pub fn pow(&self, k: u32) -> Result<CharacterPolynomial> {
        (0..k).try_fold(CharacterPolynomial::one(self.arity()), |acc, _| acc.multiply(self))
    }
}

/// Degree bound for a product; the coordinatewise sum of the factors' degrees.
pub fn product_degree_bound(p: &CharacterPolynomial, q: &CharacterPolynomial) -> SizeVector {
    &p.degree() + &q.degree()
}
