//! Abelian McFarland difference sets with `q = 2^m`, `n = 2`: groups,
//! characters, group rings, building sets and transversal oracles.

pub mod characters;
pub mod designs;
pub mod error;
pub mod group;
pub mod group_ring;
pub mod transversal;

pub use error::{Error, Result};
