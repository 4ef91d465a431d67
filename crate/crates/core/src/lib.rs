//! Nef partitions of reflexive polytopes and string-theoretic Hodge numbers
//! of the Calabi-Yau complete intersections they define.
//!
//! The pipeline runs weight block → polytope `Δ` ([`weights`]) → nef
//! partitions of `Δ*` ([`nefpart`]) → Gorenstein cones and face posets
//! ([`cone`]) → E-polynomial and Hodge numbers ([`hodge`]). All arithmetic is
//! exact.

pub mod cli;
pub mod cone;
pub mod error;
pub mod exact;
pub mod hodge;
pub mod nefpart;
pub mod polytope;
pub mod scan;
pub mod weights;

pub use error::{Error, Result};
