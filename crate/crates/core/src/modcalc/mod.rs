//! Free `FI^m`-modules carried by their characters: induction, tensor
//! products through push-out sets, duals, coinvariants and hom spaces.
//!
//! ```
//! use repstab::modcalc::{hom_dim, VirtualFreeModule};
//! use repstab::symcore::{ClassFunction, SizeVector};
//!
//! let x = VirtualFreeModule::induced(ClassFunction::trivial(&SizeVector::new(vec![1])));
//! let d = SizeVector::new(vec![4]);
//! assert_eq!(hom_dim(&x, &x, &d)?, repstab::rational::q(2));
//! # Ok::<(), repstab::Error>(())
//! ```

mod gset;
mod hom;
mod induction;
mod module;
mod tensor;

pub use gset::{subgroups, FiniteGSet, GroupElements};
pub use hom::{coinvariants_dim, hom_dim, hom_dim_via_coinvariants};
pub use induction::{induction_oracle, induction_oracle_linear, young_expansion};
pub use module::{categorify, dual, ind_character, module_character, Summand, VirtualFreeModule};
pub use tensor::{pushout_character, tensor, tensor_decompose};
