//! Exact arithmetic for λ-homomorphic braces on Z².
//!
//! A brace on the free abelian group Z² whose λ-map is a homomorphism of the
//! additive group is fixed by two matrices `φ = λ_x` and `ψ = λ_y` in GL₂(Z).
//! This crate checks which pairs actually produce a brace, sorts valid pairs
//! into the twelve known parametric families, builds the Yang–Baxter solution
//! attached to a brace, and cross-checks the classification by brute force on
//! bounded boxes of matrices.
//!
//! All arithmetic is on `i64` with overflow checks; nothing wraps silently.

pub mod brace;
pub mod classification;
pub mod cli;
pub mod error;
pub mod gl2z;
pub mod ybe;

pub use brace::{BraceSpec, HolElement, Vec2, Verdict};
pub use classification::{RowLabel, RowParams, SearchReport, Sign};
pub use error::{Error, Result};
pub use gl2z::{Mat2, MatOrder};
pub use ybe::{PairZ2, YbeReport, YbeSolution};
