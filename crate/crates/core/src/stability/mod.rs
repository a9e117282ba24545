//! Representation stability: padded partitions, the stable character
//! polynomials `P_λ̄`, and stable decompositions of free modules.
//!
//! ```
//! use repstab::stability::stable_decompose;
//! use repstab::modcalc::VirtualFreeModule;
//! use repstab::symcore::{ClassFunction, SizeVector};
//!
//! let pairs = VirtualFreeModule::induced(ClassFunction::trivial(&SizeVector::new(vec![2])));
//! let stable = stable_decompose(&pairs)?;
//! let labels: Vec<String> = stable.entries.keys().map(|l| l.to_string()).collect();
//! assert_eq!(labels, ["()", "(1)", "(2)"]);
//! # Ok::<(), repstab::Error>(())
//! ```

mod decompose;
mod padded;
mod stable;

pub use decompose::{stability_onset, stable_decompose, StableDecomposition};
pub use padded::{pad, PaddedPartitionFamily};
pub use stable::{orthonormality_report, stable_char_poly, stable_char_poly_solve, OrthonormalityReport, StableSolve};
