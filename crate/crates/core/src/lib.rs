//! Exact symbolic tools for decomposing Specht modules of Hecke algebras at
//! `q = -1` into Young modules.
//!
//! Modules are never built as vector spaces. Everything is carried by labels
//! (partitions and compositions), formal characters and multiplicities:
//!
//! - [`partition`]: partitions, compositions, conjugation, dominance, cores.
//! - [`schur`]: sparse integer combinations of Schur functions, Pieri and
//!   Littlewood–Richardson products, and the adapted/core truncations.
//! - [`special`]: the signed-digit "special pair" predicates.
//! - [`character`]: weight multiplicities of simple modules via Steinberg
//!   tensor product factorisation.
//! - [`decompose`]: the Specht decompositions and block components.
//! - [`verify`]: character-level identities that back the decompositions.

pub mod character;
pub mod decompose;
pub mod error;
pub mod partition;
pub mod schur;
pub mod special;
pub mod verify;

pub use character::WeightCharacter;
pub use decompose::{BlockComponent, Decomposition, Summand, Theorem};
pub use error::{Error, Result};
pub use partition::{Composition, Partition};
pub use schur::{Coeff, SchurSum};
pub use special::SpecialParams;
