//! Exact linear algebra over ℚ by fraction-free (Bareiss) elimination.
//!
//! Rows are scaled to integers first; every intermediate division in the
//! elimination is exact. Pivots are the first nonzero entry scanning rows in
//! their given order, so results are deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{denominator_lcm, Q};

/// Row echelon form of an integer matrix with the pivot column of each
/// nonzero row.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn integer_rows(rows: &[Vec<Q>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let scale = Q::from_integer(denominator_lcm(row));
            row.iter().map(|v| (v * &scale).to_integer()).collect()
        })
        .collect()
}

/// Bareiss elimination restricted to the first `cols` columns; any further
/// columns (an augmented right-hand side) are carried along.
fn bareiss(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let width = rows.first().map_or(0, Vec::len);
    let mut previous = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (upper, lower) = rows.split_at_mut(r + 1);
        let pivot_row = &upper[r];
        // With pivot == previous the update fixes every column where the pivot
        // row is zero, so only its support needs touching.
        let unit_step = pivot_row[c] == previous;
        let support: Vec<usize> = (c + 1..width).filter(|&j| !pivot_row[j].is_zero()).collect();
        for row in lower.iter_mut() {
            let factor = row[c].clone();
            if unit_step {
                if factor.is_zero() {
                    continue;
                }
                for &j in &support {
                    let value = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                    row[j] = value / &previous;
                }
                row[c] = BigInt::zero();
                continue;
            }
            for j in c + 1..width {
                let value = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                let (quotient, remainder) = value.div_rem(&previous);
                debug_assert!(remainder.is_zero(), "Bareiss division must be exact");
                row[j] = quotient;
            }
            row[c] = BigInt::zero();
        }
        previous = rows[r][c].clone();
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Echelon { rows, pivots }
}

/// Rank of a rational matrix given by rows.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    bareiss(integer_rows(rows), cols).pivots.len()
}

/// Unique solution `x` of `A x = b`.
///
/// Fails with [`Error::Inconsistent`] when no solution exists and with
/// [`Error::RankDeficient`] when the solution is not unique; never picks one
/// solution among many.
pub fn solve(a: &[Vec<Q>], b: &[Q], context: &str) -> Result<Vec<Q>> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            expected: format!("{} right-hand side entries", a.len()),
            found: b.len().to_string(),
        });
    }
    let cols = a.first().map_or(0, Vec::len);
    let augmented: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut row = row.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    let Echelon { rows, pivots } = bareiss(integer_rows(&augmented), cols);
    if rows[pivots.len()..].iter().any(|row| !row[cols].is_zero()) {
        return Err(Error::Inconsistent(context.to_string()));
    }
    if pivots.len() < cols {
        return Err(Error::RankDeficient {
            context: context.to_string(),
            rank: pivots.len(),
            unknowns: cols,
        });
    }
    let mut x = vec![Q::zero(); cols];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let row = &rows[r];
        let mut rhs = Q::from_integer(row[cols].clone());
        for j in c + 1..cols {
            if !row[j].is_zero() {
                rhs -= Q::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[c] = rhs / Q::from_integer(row[c].clone());
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[0, 1, 0], &[0, 0, 1], &[0, 1, 1]])), 2);
        assert_eq!(rank(&m(&[&[2, 1, 3], &[1, 0, 1], &[0, 1, 5]])), 3);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn solves_overdetermined_consistent_system() {
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)], vec![q_frac(1, 2), q(0)]];
        let b = vec![q(3), q(1), q(1)];
        assert_eq!(solve(&a, &b, "t").unwrap(), vec![q(2), q(1)]);
    }

    #[test]
    fn reports_inconsistency_and_deficiency() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(matches!(solve(&a, &[q(1), q(3)], "t"), Err(Error::Inconsistent(_))));
        assert!(matches!(
            solve(&a, &[q(1), q(2)], "t"),
            Err(Error::RankDeficient {
                rank: 1,
                unknowns: 2,
                ..
            })
        ));
    }

    #[test]
    fn hilbert_inverse_column() {
        // H_4 x = e_1 has the integer solution (16, -120, 240, -140).
        let a: Vec<Vec<Q>> = (0..4).map(|i| (0..4).map(|j| q_frac(1, i + j + 1)).collect()).collect();
        let b = vec![q(1), q(0), q(0), q(0)];
        assert_eq!(solve(&a, &b, "hilbert").unwrap(), vec![q(16), q(-120), q(240), q(-140)]);
    }
}
