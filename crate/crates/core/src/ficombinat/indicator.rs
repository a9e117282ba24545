use crate::cutoff::Cutoffs;
use crate::error::Result;
use crate::symcore::MultiClass;

use super::injection::binomial_set;
use super::perm::MultiPermutation;

/// Literal evaluation of the indicator `(X choose μ̄)` at `σ`: the number of
/// orbits `[f]` in `(d̄ choose |μ̄|)` for which some `ψ ∈ μ̄` satisfies
/// `σ ∘ f = f ∘ ψ`.
///
/// This is an exhaustive search over orbit representatives and over every
/// element of the class `μ̄`, meant as an independent check of the closed
/// form in [`crate::charpoly::eval_indicator`].
pub fn indicator_oracle(mu: &MultiClass, sigma: &MultiPermutation, cutoffs: &Cutoffs) -> Result<u64> {
    let d = sigma.degrees();
    let c = mu.sizes();
    c.check_arity(d.arity())?;
    cutoffs.check_oracle(&d)?;
    if !c.le_all(&d) {
        return Ok(0);
    }
    let class = MultiPermutation::all_in_class(mu, cutoffs)?;
    let mut count = 0;
    for f in binomial_set(&c, &d, cutoffs)? {
        let moved = f.after(sigma);
        if class.iter().any(|psi| f.before(psi) == moved) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ficombinat::Permutation;
    use crate::symcore::{Partition, SizeVector};

    fn single(parts: &[usize]) -> MultiClass {
        MultiClass::single(Partition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn identity_class_of_s1_counts_fixed_points() {
        let cut = Cutoffs::default();
        for sigma in Permutation::all(4) {
            let fixed = sigma.images().iter().enumerate().filter(|(i, &j)| *i == j).count();
            let s = MultiPermutation::new(vec![sigma]);
            assert_eq!(indicator_oracle(&single(&[1]), &s, &cut).unwrap(), fixed as u64);
        }
    }

    #[test]
    fn too_large_class_gives_zero() {
        let sigma = MultiPermutation::identity(&SizeVector::new(vec![2]));
        assert_eq!(
            indicator_oracle(&single(&[2, 1]), &sigma, &Cutoffs::default()).unwrap(),
            0
        );
    }

    #[test]
    fn transposition_class_on_double_transposition() {
        let sigma = MultiPermutation::new(vec![Permutation::new(vec![1, 0, 3, 2]).unwrap()]);
        assert_eq!(indicator_oracle(&single(&[2]), &sigma, &Cutoffs::default()).unwrap(), 2);
    }
}
