//! Partitions, conjugacy classes and irreducible characters of products of
//! symmetric groups, and exact class-function arithmetic.

mod character;
mod classes;
mod classfn;
mod multi;
mod partition;

pub use character::{character_table, irreducible_character, irreducible_character_multi, CharacterTable};
pub use classes::{class_table, conjugacy_classes, ClassTable};
pub use classfn::{decompose, inner_product, reconstruct, ClassFunction};
pub use multi::{MultiClass, SizeVector};
pub use partition::{class_data, partitions_of, Partition};
