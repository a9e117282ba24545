use std::collections::HashMap;

use num_traits::Zero;

use crate::cutoff::Cutoffs;
use crate::error::{Error, Result};
use crate::ficombinat::{enumerate_injections, MultiPermutation};
use crate::linalg;
use crate::rational::Q;
use crate::symcore::{class_table, ClassFunction, MultiClass, SizeVector};

use super::gset::FiniteGSet;

/// Character of `Ind_c̄(ℚ[Y])` at `d̄`, computed from the definition.
///
/// Builds `Hom(c̄, d̄) × Y` modulo `(f ∘ g, y) ~ (f, g·y)`, lets `S_d̄` act
/// by post-composition, and counts the orbits each class fixes. This is the
/// trace of a permutation representation, so no matrices are needed.
pub fn induction_oracle(y: &FiniteGSet, d: &SizeVector, cutoffs: &Cutoffs) -> Result<ClassFunction> {
    let c = y.group();
    c.check_arity(d.arity())?;
    cutoffs.check_oracle(d)?;
    let homs = enumerate_injections(c, d, cutoffs)?;
    let hom_index: HashMap<_, _> = homs.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let n = y.len();
    let elements = y.elements();
    let inverses: Vec<MultiPermutation> = elements.elements.iter().map(MultiPermutation::inverse).collect();

    // Orbit of (f, y) under g ↦ (f ∘ g⁻¹, g·y).
    let mut orbit = vec![usize::MAX; homs.len() * n];
    let mut reps = Vec::new();
    for start in 0..orbit.len() {
        if orbit[start] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(start);
        let (f, point) = (&homs[start / n], start % n);
        for (g, g_inv) in inverses.iter().enumerate() {
            let moved = hom_index[&f.before(g_inv)] * n + y.action_of(g)[point];
            orbit[moved] = id;
        }
    }

    let classes = ClassFunction::zero(d).table();
    let values = classes
        .classes
        .iter()
        .map(|class| {
            let sigma = MultiPermutation::of_class(class);
            let fixed = reps
                .iter()
                .enumerate()
                .filter(|(id, &rep)| {
                    let moved = hom_index[&homs[rep / n].after(&sigma)] * n + rep % n;
                    orbit[moved] == *id
                })
                .count();
            Q::from_integer(fixed.into())
        })
        .collect();
    ClassFunction::new(d.clone(), values).map_err(|e| Error::Inconsistent(e.to_string()))
}

/// Coefficients `a_λ̄` with `χ = Σ a_λ̄ · 1↑_{S_λ̄}`, where `1↑_{S_λ̄}` is the
/// permutation character on the cosets of the Young subgroup `S_λ̄`. These
/// characters form a basis of the rational class functions.
pub fn young_expansion(chi: &ClassFunction, cutoffs: &Cutoffs) -> Result<Vec<(MultiClass, Q)>> {
    let labels = class_table(chi.group()).classes.clone();
    let columns = labels
        .iter()
        .map(|lambda| Ok(FiniteGSet::young(lambda, cutoffs)?.fixed_point_character()))
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<Vec<Q>> = (0..labels.len())
        .map(|i| columns.iter().map(|col| col.values()[i].clone()).collect())
        .collect();
    let coeffs = linalg::solve(&rows, chi.values(), "Young permutation character expansion")?;
    Ok(labels.into_iter().zip(coeffs).filter(|(_, a)| !a.is_zero()).collect())
}

/// [`induction_oracle`] extended linearly to any class function through its
/// Young expansion.
pub fn induction_oracle_linear(chi: &ClassFunction, d: &SizeVector, cutoffs: &Cutoffs) -> Result<ClassFunction> {
    young_expansion(chi, cutoffs)?
        .into_iter()
        .try_fold(ClassFunction::zero(d), |acc, (lambda, a)| {
            let y = FiniteGSet::young(&lambda, cutoffs)?;
            acc.add(&induction_oracle(&y, d, cutoffs)?.scale(&a))
        })
}
