use num_traits::Zero;

use crate::charpoly::inner;
use crate::cutoff::Cutoffs;
use crate::error::Result;
use crate::rational::Q;
use crate::symcore::{inner_product, ClassFunction, SizeVector};

use super::module::{dual, module_character, VirtualFreeModule};
use super::tensor::tensor;

/// `dim (M_d̄)_{S_d̄}`: each `Ind_c̄(V)` contributes `dim V_{S_c̄}` when
/// `c̄ ≤ d̄` and nothing otherwise.
pub fn coinvariants_dim(module: &VirtualFreeModule, d: &SizeVector) -> Result<Q> {
    d.check_arity(module.arity())?;
    module.summands().iter().try_fold(Q::zero(), |acc, s| {
        if !s.degree().le_all(d) {
            return Ok(acc);
        }
        let invariants = inner_product(&s.rep, &ClassFunction::trivial(s.degree()))?;
        Ok(acc + &s.coeff * invariants)
    })
}

/// `dim Hom_{S_d̄}(M_d̄, N_d̄)` as the inner product of the characters.
pub fn hom_dim(m: &VirtualFreeModule, n: &VirtualFreeModule, d: &SizeVector) -> Result<Q> {
    inner(&module_character(m), &module_character(n), d)
}

/// `dim Hom_{S_d̄}(M_d̄, N_d̄)` as the coinvariants of `M^* ⊗ N`.
pub fn hom_dim_via_coinvariants(
    m: &VirtualFreeModule,
    n: &VirtualFreeModule,
    d: &SizeVector,
    cutoffs: &Cutoffs,
) -> Result<Q> {
    coinvariants_dim(&tensor(&dual(m), n, cutoffs)?, d)
}
