//! Semigroups of I-type and their Yang-Baxter, word-problem and
//! crystallographic structure.
//!
//! The pipeline runs presentation → pair map `r` → I-structure table →
//! permutation calculus `φ` → affine action on `Zⁿ`:
//!
//! * [`presentation`]: quadratic presentations and their shape conditions;
//! * [`ybr`]: the map `r`, its axioms, orbits on `X³`, and small-`n` census;
//! * [`istructure`]: the table `x_{b,i}`, normal forms, the word problem;
//! * [`structuremaps`]: `φ`, its kernel exponents and the coset decomposition;
//! * [`bieberbach`]: the affine lattice action, freeness and tiling checks.

pub mod bieberbach;
pub mod cli;
pub mod error;
pub mod istructure;
pub mod presentation;
pub mod report;
pub mod structuremaps;
pub mod types;
pub mod ybr;

pub use error::{Error, Result};
pub use types::{Alphabet, ExpVec, Gen, Perm, Word};
