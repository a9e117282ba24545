use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg;
use crate::memo::Memo;
use crate::rational::Q;
use crate::symcore::{class_table, MultiClass, SizeVector};

use super::poly::{eval_indicator, CharacterPolynomial};

/// Every class `μ̄` with `|μ̄| ≤ bound`, in canonical order. These index the
/// indicators of degree at most `bound`, and also the classes of all groups
/// `S_d̄` with `d̄ ≤ bound`.
pub fn indicators_up_to(bound: &SizeVector) -> Vec<MultiClass> {
    let mut out: Vec<MultiClass> = SizeVector::boxed_range(&SizeVector::zero(bound.arity()), bound)
        .iter()
        .flat_map(|d| class_table(d).classes.clone())
        .collect();
    out.sort();
    out
}

/// Values of a list of indicators (columns) on a list of classes (rows).
#[derive(Debug)]
pub struct IndicatorMatrix {
    pub indicators: Vec<MultiClass>,
    pub classes: Vec<MultiClass>,
    pub entries: Vec<Vec<Q>>,
}

impl IndicatorMatrix {
    pub fn build(indicators: Vec<MultiClass>, classes: Vec<MultiClass>) -> Self {
        let entries = classes
            .iter()
            .map(|nu| indicators.iter().map(|mu| eval_indicator(mu, nu)).collect())
            .collect();
        IndicatorMatrix {
            indicators,
            classes,
            entries,
        }
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }
}

fn matrix_memo() -> &'static Memo<SizeVector, IndicatorMatrix> {
    static MEMO: OnceLock<Memo<SizeVector, IndicatorMatrix>> = OnceLock::new();
    MEMO.get_or_init(Memo::new)
}

/// Indicators of degree `≤ bound` evaluated on the classes of every `S_d̄`
/// with `d̄ ≤ bound`. The matrix is square and unitriangular in canonical
/// order, since `(X choose μ̄)` vanishes on `ν̄` unless `μ̄` sits inside `ν̄`.
pub fn indicator_matrix(bound: &SizeVector) -> Arc<IndicatorMatrix> {
    matrix_memo().get_or_insert_with(bound, || {
        let indicators = indicators_up_to(bound);
        IndicatorMatrix::build(indicators.clone(), indicators)
    })
}

/// Indicators of degree `≤ bound` evaluated on `S_bound` alone. This has
/// fewer rows than columns once `bound` is nonzero.
pub fn single_group_matrix(bound: &SizeVector) -> IndicatorMatrix {
    IndicatorMatrix::build(indicators_up_to(bound), class_table(bound).classes.clone())
}

/// The unique character polynomial of degree `≤ bound` whose values on all
/// groups `S_d̄`, `d̄ ≤ bound`, are given by `f`.
pub fn fit(bound: &SizeVector, f: impl Fn(&MultiClass) -> Q, context: &str) -> Result<CharacterPolynomial> {
    let matrix = indicator_matrix(bound);
    let rhs: Vec<Q> = matrix.classes.iter().map(f).collect();
    let solution = linalg::solve(&matrix.entries, &rhs, context)?;
    CharacterPolynomial::from_terms(bound.arity(), matrix.indicators.iter().cloned().zip(solution))
}

/// Checks `poly(ν̄) = f(ν̄)` on every class of `S_group`.
pub fn verify_on(
    poly: &CharacterPolynomial,
    group: &SizeVector,
    f: impl Fn(&MultiClass) -> Q,
    context: &str,
) -> Result<()> {
    for nu in class_table(group).classes.iter() {
        if poly.eval(nu) != f(nu) {
            return Err(Error::VerificationFailed(format!(
                "{context}: mismatch on class {nu} of S_{group:?}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_rank_over_all_smaller_groups() {
        for bound in [vec![0], vec![3], vec![4], vec![2, 2], vec![3, 1], vec![1, 1, 1]] {
            let bound = SizeVector::new(bound);
            let m = indicator_matrix(&bound);
            assert_eq!(m.rank(), m.indicators.len(), "bound {bound:?}");
        }
    }

    #[test]
    fn one_group_is_not_enough() {
        let m = single_group_matrix(&SizeVector::new(vec![3]));
        assert_eq!(m.indicators.len(), 7);
        assert_eq!(m.classes.len(), 3);
        assert!(m.rank() < m.indicators.len());
    }
}
