//! Combinatorial invariants of decorated Heegaard diagrams of rational homology spheres.
//!
//! A diagram comes with a matching of crossings and a planar layout (β arc turnings).
//! From these the crate computes ℓ₂, s_ℓ, the Euler term e and Θ̃ = ℓ₂ + s_ℓ − e exactly,
//! the variation formulas under changes of exterior point and matching, the effect of
//! diagram moves, and the Casson surgery quantities of a Seifert linking matrix.

#![allow(clippy::needless_range_loop)]

pub mod arcs;
pub mod checks;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod layout;
pub mod linalg;
pub mod moves;
pub mod rational;
pub mod surgery;
pub mod variations;

pub use diagram::{parse_hdg, to_hdg, BetaEntry, Dart, Diagram, DiagramSpec, Faces, Kind};
pub use error::{Error, Result};
pub use linalg::{IntMatrix, RationalMatrix};
pub use rational::{fmt_q, Q};
