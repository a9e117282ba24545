//! Character polynomials: rational combinations of the indicators
//! `(X choose μ̄)`, which count the ways to pick a set of cycles of type `μ̄`.
//!
//! ```
//! use repstab::charpoly::CharacterPolynomial;
//! use repstab::symcore::{MultiClass, Partition};
//!
//! let x = CharacterPolynomial::cycle_count(1, 0, 1);
//! let pairs = CharacterPolynomial::indicator(&MultiClass::single(Partition::new(vec![1, 1])?));
//! assert_eq!(x.multiply(&pairs)?.to_string(), "2*binom(X,(1,1)) + 3*binom(X,(1,1,1))");
//! # Ok::<(), repstab::Error>(())
//! ```

mod basis;
mod poly;
mod product;
mod stats;
mod xk;

pub use basis::{fit, indicator_matrix, indicators_up_to, single_group_matrix, verify_on, IndicatorMatrix};
pub use poly::{eval_indicator, CharacterPolynomial};
pub use product::product_degree_bound;
pub use stats::{expectation, inner, stable_expectation, stable_inner};
pub use xk::{from_xk, multiply_via_xk, to_xk, CycleVar, Monomial, XkPolynomial};
