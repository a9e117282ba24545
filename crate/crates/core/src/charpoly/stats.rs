use crate::error::Result;
use crate::rational::Q;
use crate::symcore::{inner_product, SizeVector};

use super::poly::CharacterPolynomial;

/// Average of `P` over `S_d̄`.
pub fn expectation(p: &CharacterPolynomial, group: &SizeVector) -> Result<Q> {
    Ok(p.eval_on(group)?.mean())
}

/// Expectation at `d̄ = deg P`, where it has stabilized.
pub fn stable_expectation(p: &CharacterPolynomial) -> Result<Q> {
    expectation(p, &p.degree())
}

/// `⟨P, Q⟩` over `S_d̄`.
pub fn inner(p: &CharacterPolynomial, q: &CharacterPolynomial, group: &SizeVector) -> Result<Q> {
    p.check_arity(q)?;
    inner_product(&p.eval_on(group)?, &q.eval_on(group)?)
}

/// Inner product at `d̄ = deg P + deg Q`, where it has stabilized.
pub fn stable_inner(p: &CharacterPolynomial, q: &CharacterPolynomial) -> Result<Q> {
    p.check_arity(q)?;
    inner(p, q, &(&p.degree() + &q.degree()))
}
