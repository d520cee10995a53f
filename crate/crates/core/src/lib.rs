//! Exact linear algebra over small finite fields and the rationals, plus the
//! combinatorial machinery needed to study minimum ranks of fooling-set
//! zero-nonzero patterns: pattern samplers, triangular-submatrix lower bounds,
//! tee-matrix extraction/reconstruction, G-pattern enumeration, zero-pattern
//! counting for polynomial tuples, and a deterministic experiment driver.
//!
//! The crate is organized so that every search has an independent cross-check:
//! minimum rank is computed both by brute-force value enumeration and by a
//! rank-factorization (G-pattern) search, and the zero-pattern counting bound
//! is certified by an explicit triangular matrix of evaluations.

pub mod bounds;
pub mod error;
pub mod experiment;
pub mod ffield;
pub mod matrix;
pub mod minrank;
pub mod patterns;
pub mod structures;
pub mod zeropatterns;

pub use error::{Error, Result};
pub use ffield::{Field, FieldElem, FieldSpec};
pub use matrix::{BitMatrix, Matrix};
pub use patterns::{FoolingPattern, MisMode, PatternGraph, RngStream};
