//! Concrete `FI^m` combinatorics: permutations, injections, binomial sets,
//! push-out sets and weak push-out squares, plus the brute-force indicator
//! oracle.

mod indicator;
mod injection;
mod perm;
mod pushout;

pub use indicator::indicator_oracle;
pub use injection::{binomial_set, enumerate_injections, Injection, MultiInjection};
pub use perm::{MultiPermutation, Permutation};
pub use pushout::{
    compose_factored, factor_pair, factored_pairs, is_weak_pushout, pushout_pairs, FactoredPair, PushoutPairs,
};
