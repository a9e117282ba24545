use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::classes::class_table;
use super::multi::{MultiClass, SizeVector};
use super::partition::Partition;
use crate::error::{Error, Result};
use crate::memo::Memo;

fn mn_memo() -> &'static Memo<(Partition, Partition), BigInt> {
    static MEMO: OnceLock<Memo<(Partition, Partition), BigInt>> = OnceLock::new();
    MEMO.get_or_init(Memo::new)
}

/// Irreducible character value `χ_λ(μ)` of `S_n` by the Murnaghan–Nakayama
/// rule.
///
/// Rim hooks are removed on the beta-set (abacus) of `λ`: a hook of length
/// `r` moves one bead from `β` to `β - r`, with sign `(-1)` to the number of
/// beads it jumps over.
pub fn irreducible_character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size().to_string(),
            found: mu.size().to_string(),
        });
    }
    Ok((*murnaghan_nakayama(lambda, mu)).clone())
}

fn murnaghan_nakayama(lambda: &Partition, mu: &Partition) -> Arc<BigInt> {
    let key = (lambda.clone(), mu.clone());
    if mu.is_empty() {
        return Arc::new(BigInt::one());
    }
    mn_memo().get_or_insert_with(&key, || {
        let r = mu.first_part();
        let rest = Partition::new(mu.parts()[1..].to_vec()).expect("tail of a partition");
        let len = lambda.len();
        let beta: Vec<usize> = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p + len - 1 - i)
            .collect();
        let mut total = BigInt::zero();
        for (i, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let jumped = beta.iter().filter(|&&x| target < x && x < b).count();
            let mut moved = beta.clone();
            moved[i] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let parts = moved.iter().enumerate().map(|(j, &x)| x - (len - 1 - j)).collect();
            let smaller = Partition::from_unsorted(parts);
            let value = murnaghan_nakayama(&smaller, &rest);
            if jumped % 2 == 0 {
                total += &*value;
            } else {
                total -= &*value;
            }
        }
        total
    })
}

/// `χ_λ̄(μ̄)` on `S_n̄`, the product of coordinate characters.
pub fn irreducible_character_multi(lambda: &MultiClass, mu: &MultiClass) -> Result<BigInt> {
    if lambda.arity() != mu.arity() {
        return Err(Error::ArityMismatch {
            left: lambda.arity(),
            right: mu.arity(),
        });
    }
    lambda
        .coords()
        .iter()
        .zip(mu.coords())
        .try_fold(BigInt::one(), |acc, (l, m)| Ok(acc * irreducible_character(l, m)?))
}

/// Character table of `S_n̄`: rows are irreducibles, columns classes, both
/// in canonical class order.
#[derive(Debug)]
pub struct CharacterTable {
    pub group: SizeVector,
    pub irreducibles: Vec<MultiClass>,
    pub values: Vec<Vec<BigInt>>,
}

fn table_memo() -> &'static Memo<SizeVector, CharacterTable> {
    static MEMO: OnceLock<Memo<SizeVector, CharacterTable>> = OnceLock::new();
    MEMO.get_or_init(Memo::new)
}

pub fn character_table(group: &SizeVector) -> Arc<CharacterTable> {
    table_memo().get_or_insert_with(group, || {
        let classes = class_table(group);
        let irreducibles = classes.classes.clone();
        let values = irreducibles
            .iter()
            .map(|lambda| {
                classes
                    .classes
                    .iter()
                    .map(|mu| irreducible_character_multi(lambda, mu).expect("same group"))
                    .collect()
            })
            .collect();
        CharacterTable {
            group: group.clone(),
            irreducibles,
            values,
        }
    })
}
