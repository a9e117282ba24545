//! Exact computations for representation stability of FI- and
//! FI^m-modules: character polynomials, free module calculus and stable
//! decompositions, with brute-force oracles for checking.
//!
//! The guide under `book/` walks through the modules; its code blocks are
//! compiled as doctests of this crate.

pub mod charpoly;
pub mod cutoff;
pub mod error;
pub mod ficombinat;
pub mod linalg;
mod memo;
pub mod modcalc;
pub mod rational;
pub mod stability;
pub mod symcore;
pub mod verify;
pub mod wire;

pub use cutoff::Cutoffs;
pub use error::{Error, Result};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/symmetric-groups.md")]
    struct SymmetricGroups;
    #[doc = include_str!("../../../book/src/character-polynomials.md")]
    struct CharacterPolynomials;
    #[doc = include_str!("../../../book/src/free-modules.md")]
    struct FreeModules;
    #[doc = include_str!("../../../book/src/stability.md")]
    struct Stability;
    #[doc = include_str!("../../../book/src/command-line.md")]
    struct CommandLine;
    #[doc = include_str!("../../../README.md")]
    struct Readme;
}
