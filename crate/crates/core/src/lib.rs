//! Exact computations in the representation theory of bound quiver
//! algebras: Auslander–Reiten translates, τ-tilting modules and τ-slices.

pub mod algebra;
pub mod artheory;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod modrep;
pub mod spectral;
pub mod tautilt;

pub use error::{Error, Result};
