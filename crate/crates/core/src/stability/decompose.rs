use std::collections::BTreeMap;

use num_traits::Zero;

use crate::charpoly::{indicators_up_to, stable_inner};
use crate::error::{Error, Result};
use crate::modcalc::{module_character, VirtualFreeModule};
use crate::rational::Q;
use crate::symcore::{decompose, MultiClass, SizeVector};

use super::padded::pad;
use super::stable::stable_char_poly;

/// Multiplicities `r_λ̄` with `M_d̄ = ⊕ r_λ̄ V_{λ̄(d̄)}` for all `d̄ ≥ valid_from`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StableDecomposition {
    pub entries: BTreeMap<MultiClass, Q>,
    pub valid_from: SizeVector,
}

impl StableDecomposition {
    /// The decomposition at a particular `d̄`, as irreducibles of `S_d̄`.
    pub fn at(&self, d: &SizeVector) -> Result<BTreeMap<MultiClass, Q>> {
        self.entries
            .iter()
            .map(|(lambda, r)| Ok((pad(lambda, d)?, r.clone())))
            .collect()
    }
}

/// Stable irreducible decomposition of a virtual free module.
///
/// Each multiplicity is the stable inner product of the module character
/// with `P_λ̄`; the result is then checked against the exact decomposition
/// of the module at `2·deg M` and `2·deg M + 1̄`.
pub fn stable_decompose(module: &VirtualFreeModule) -> Result<StableDecomposition> {
    let chi = module_character(module);
    let degree = module.degree();
    let mut entries = BTreeMap::new();
    for lambda in indicators_up_to(&degree) {
        let mult = stable_inner(&chi, &*stable_char_poly(&lambda)?)?;
        if !mult.is_zero() {
            entries.insert(lambda, mult);
        }
    }
    let out = StableDecomposition {
        entries,
        valid_from: degree.scale(2),
    };
    for d in [out.valid_from.clone(), out.valid_from.plus_each(1)] {
        let actual = decompose(&chi.eval_on(&d)?);
        if actual != out.at(&d)? {
            return Err(Error::VerificationFailed(format!(
                "stable decomposition does not reconstruct the module at {d}"
            )));
        }
    }
    Ok(out)
}

/// Smallest `t ≤ limit` such that the stable decomposition already holds at
/// every `t'·1̄` with `t ≤ t' ≤ limit`, or `None` if it fails at `limit`.
pub fn stability_onset(module: &VirtualFreeModule, limit: usize) -> Result<Option<usize>> {
    let stable = stable_decompose(module)?;
    let chi = module_character(module);
    let mut onset = None;
    for t in (0..=limit).rev() {
        let d = SizeVector::splat(module.arity(), t);
        let holds = match stable.at(&d) {
            Ok(expected) => decompose(&chi.eval_on(&d)?) == expected,
            Err(Error::BelowStableRange { .. }) => false,
            Err(e) => return Err(e),
        };
        if !holds {
            break;
        }
        onset = Some(t);
    }
    Ok(onset)
}
