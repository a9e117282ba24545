use std::sync::{Arc, OnceLock};

use crate::charpoly::{eval_indicator, indicators_up_to, stable_inner, CharacterPolynomial};
use crate::error::{Error, Result};
use crate::linalg;
use crate::memo::Memo;
use crate::rational::Q;
use crate::symcore::{class_table, irreducible_character, MultiClass, Partition, SizeVector};

use super::padded::PaddedPartitionFamily;

fn memo() -> &'static Memo<MultiClass, CharacterPolynomial> {
    static MEMO: OnceLock<Memo<MultiClass, CharacterPolynomial>> = OnceLock::new();
    MEMO.get_or_init(Memo::new)
}

fn padded_value(lambda: &Partition, nu: &Partition) -> Result<Q> {
    let n = SizeVector::new(vec![nu.size()]);
    let padded = PaddedPartitionFamily::new(MultiClass::single(lambda.clone())).at(&n)?;
    Ok(Q::from_integer(irreducible_character(&padded.coords()[0], nu)?))
}

fn check_against_characters(p: &CharacterPolynomial, lambda: &Partition, n: usize) -> Result<()> {
    for nu in class_table(&SizeVector::new(vec![n])).classes.iter() {
        if p.eval(nu) != padded_value(lambda, &nu.coords()[0])? {
            return Err(Error::VerificationFailed(format!(
                "stable character polynomial of {lambda} disagrees with the irreducible character at S_{n}, class {nu}"
            )));
        }
    }
    Ok(())
}

/// How a single-coordinate `P_λ` was obtained.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StableSolve {
    pub poly: CharacterPolynomial,
    /// Group sizes whose classes supplied the constraints.
    pub sample_sizes: Vec<usize>,
    /// `(rank, unknowns)` when the two default sizes did not determine the
    /// solution and more sizes had to be sampled.
    pub default_rank: Option<(usize, usize)>,
}

fn memo_single() -> &'static Memo<Partition, StableSolve> {
    static MEMO: OnceLock<Memo<Partition, StableSolve>> = OnceLock::new();
    MEMO.get_or_init(Memo::new)
}

/// Single-coordinate `P_λ` by exact solve against Murnaghan–Nakayama values.
///
/// Constraints come from `S_s` and `S_{s+1}` with `s = |λ| + λ_1`. When
/// those leave the system rank deficient, further sizes are added one at a
/// time up to `2|λ|`, where a polynomial of degree `|λ|` is determined by
/// its values. The solution is then checked at two more sizes.
pub fn stable_char_poly_solve(lambda: &Partition) -> Result<Arc<StableSolve>> {
    memo_single().try_get_or_insert_with(lambda, || {
        let start = lambda.size() + lambda.first_part();
        let last = (start + 1).max(2 * lambda.size());
        let unknowns = indicators_up_to(&SizeVector::new(vec![lambda.size()]));
        let context = format!("stable character polynomial of {lambda}");
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        let mut sample_sizes = Vec::new();
        let mut default_rank = None;
        let coeffs = loop {
            let n = start + sample_sizes.len();
            for nu in class_table(&SizeVector::new(vec![n])).classes.iter() {
                rows.push(unknowns.iter().map(|mu| eval_indicator(mu, nu)).collect::<Vec<_>>());
                rhs.push(padded_value(lambda, &nu.coords()[0])?);
            }
            sample_sizes.push(n);
            if sample_sizes.len() < 2 {
                continue;
            }
            match linalg::solve(&rows, &rhs, &context) {
                Ok(c) => break c,
                Err(Error::RankDeficient { rank, unknowns, .. }) if n < last => {
                    default_rank.get_or_insert((rank, unknowns));
                }
                Err(e) => return Err(e),
            }
        };
        let poly = CharacterPolynomial::from_terms(1, unknowns.into_iter().zip(coeffs))?;
        let top = *sample_sizes.last().expect("at least two sizes sampled");
        for n in [top + 1, top + 2] {
            check_against_characters(&poly, lambda, n)?;
        }
        Ok(StableSolve {
            poly,
            sample_sizes,
            default_rank,
        })
    })
}

/// The character polynomial `P_λ̄` with `P_λ̄(σ) = χ_{λ̄(d̄)}(σ)` for every
/// `σ ∈ S_d̄` once `d̄ ≥ |λ̄| + λ̄_1`. For several coordinates it is the
/// external product of the coordinate polynomials.
pub fn stable_char_poly(lambda: &MultiClass) -> Result<Arc<CharacterPolynomial>> {
    memo().try_get_or_insert_with(lambda, || {
        if lambda.arity() == 1 {
            return Ok(stable_char_poly_solve(&lambda.coords()[0])?.poly.clone());
        }
        let factors = lambda
            .coords()
            .iter()
            .map(|part| stable_char_poly(&MultiClass::single(part.clone())).map(|p| (*p).clone()))
            .collect::<Result<Vec<_>>>()?;
        CharacterPolynomial::external_product(&factors)
    })
}

/// Gram matrix of `P_λ̄` over all `|λ̄| ≤ bound`, each entry a stable inner
/// product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrthonormalityReport {
    pub labels: Vec<MultiClass>,
    pub gram: Vec<Vec<Q>>,
}

impl OrthonormalityReport {
    pub fn is_identity(&self) -> bool {
        self.gram.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| *v == Q::from_integer((i == j).into()))
        })
    }
}

pub fn orthonormality_report(bound: &SizeVector) -> Result<OrthonormalityReport> {
    let labels = indicators_up_to(bound);
    let polys = labels.iter().map(stable_char_poly).collect::<Result<Vec<_>>>()?;
    let gram = polys
        .iter()
        .map(|p| polys.iter().map(|q| stable_inner(p, q)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(OrthonormalityReport { labels, gram })
}
